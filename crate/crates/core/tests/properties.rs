use proptest::prelude::*;
use satvote_core::*;

/// Profiles with up to `max_m` candidates; each ballot is a non-empty bitmask.
fn profiles(max_m: usize, max_n: usize) -> impl Strategy<Value = Profile> {
    (1..=max_m).prop_flat_map(move |m| {
        prop::collection::vec(1u32..(1 << m), 1..=max_n).prop_map(move |masks| {
            let ballots = masks
                .into_iter()
                .map(|mask| (0..m).filter(|c| mask & (1 << c) != 0).collect::<Vec<_>>());
            Profile::from_index_lists(gen::candidate_names(m), ballots).unwrap()
        })
    })
}

fn profile_and_committee() -> impl Strategy<Value = (Profile, Committee)> {
    profiles(8, 12).prop_flat_map(|p| {
        let m = p.num_candidates();
        (Just(p), 1u32..(1 << m)).prop_map(move |(p, mask)| {
            let w = Committee::new((0..m).filter(|c| mask & (1 << c) != 0), m).unwrap();
            (p, w)
        })
    })
}

fn rules() -> impl Strategy<Value = RuleId> {
    prop::sample::select(RuleId::ALL.to_vec())
}

fn committee_sets(result: &WinnersResult) -> Vec<Committee> {
    assert!(!result.truncated());
    result.committees().to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn committee_score_decomposes((p, w) in profile_and_committee(), rule in rules()) {
        let k = w.len();
        let direct = committee_score(&p, rule, &w).unwrap();
        let summed: ExactScore = w
            .members()
            .iter()
            .map(|&c| candidate_score(&p, rule, k, c).unwrap())
            .sum();
        prop_assert_eq!(direct, summed);
    }

    #[test]
    fn fast_path_matches_oracle(p in profiles(7, 10), rule in rules()) {
        for k in 1..=p.num_candidates() {
            let outcome = equivalence_check(&p, rule, SizeSpec::Fixed(k)).unwrap();
            prop_assert!(outcome.agrees(), "{:?}", outcome.discrepancies);
            let all = winners_fixed_k(&p, rule, k, TiePolicy::enumerate_up_to(1 << 10).unwrap()).unwrap();
            prop_assert_eq!(committee_sets(&all), outcome.report.optimal_committees);
        }
        let outcome = equivalence_check(&p, rule, SizeSpec::Any).unwrap();
        prop_assert!(outcome.agrees(), "{:?}", outcome.discrepancies);
    }

    #[test]
    fn size_one_coincides_with_av(p in profiles(8, 12)) {
        for tie in [TiePolicy::Lexicographic, TiePolicy::enumerate_up_to(1 << 10).unwrap()] {
            let av = winners_fixed_k(&p, RuleId::Av, 1, tie).unwrap();
            for rule in [RuleId::Csav, RuleId::Msav] {
                let other = winners_fixed_k(&p, rule, 1, tie).unwrap();
                prop_assert_eq!(other.committees(), av.committees());
                prop_assert_eq!(other.score(), av.score());
            }
        }
    }

    #[test]
    fn csav_selects_like_av(p in profiles(8, 12)) {
        for k in 1..=p.num_candidates() {
            for tie in [TiePolicy::Lexicographic, TiePolicy::enumerate_up_to(1 << 10).unwrap()] {
                let av = winners_fixed_k(&p, RuleId::Av, k, tie).unwrap();
                let csav = winners_fixed_k(&p, RuleId::Csav, k, tie).unwrap();
                prop_assert_eq!(csav.committees(), av.committees());
                prop_assert_eq!(csav.score(), &ExactScore::ratio(av.score().numer().clone(), k as u64));
            }
        }
    }

    #[test]
    fn sav_never_drops_when_adding((p, w) in profile_and_committee()) {
        let m = p.num_candidates();
        let base = committee_score(&p, RuleId::Sav, &w).unwrap();
        for c in (0..m).filter(|&c| !w.contains(c)) {
            let grown = Committee::new(w.members().iter().copied().chain([c]), m).unwrap();
            prop_assert!(committee_score(&p, RuleId::Sav, &grown).unwrap() >= base);
        }
        let any = winners_any_size(&p, RuleId::Sav, TiePolicy::Lexicographic).unwrap();
        prop_assert_eq!(any.committee(), &Committee::full(m));
        prop_assert_eq!(any.score(), &ExactScore::from_integer(p.num_ballots() as u64));
    }

    #[test]
    fn scores_are_bounded((p, w) in profile_and_committee(), rule in rules()) {
        let score = committee_score(&p, rule, &w).unwrap();
        prop_assert!(score >= ExactScore::zero());
        let upper = match rule {
            RuleId::Av => p.ballots().iter().map(Ballot::len).sum::<usize>(),
            _ => p.num_ballots(),
        };
        prop_assert!(score <= ExactScore::from_integer(upper as u64));
    }

    #[test]
    fn lexicographic_winner_heads_the_score_table(p in profiles(8, 12), rule in rules()) {
        for k in 1..=p.num_candidates() {
            let table = score_table(&p, rule, k).unwrap();
            prop_assert_eq!(table.len(), p.num_candidates());
            let mut head: Vec<usize> = table[..k].iter().map(|&(c, _)| c).collect();
            head.sort_unstable();
            let lex = winners_fixed_k(&p, rule, k, TiePolicy::Lexicographic).unwrap();
            prop_assert_eq!(lex.committee().members(), head.as_slice());
        }
    }

    #[test]
    fn documents_round_trip(m in 1usize..12, n in 1usize..30, p in 0.05f64..=1.0, seed in any::<u64>()) {
        let profile = random_profile(&CultureSpec::new(m, n, p, seed).unwrap()).unwrap();
        let text = serialize_profile(&profile);
        let parsed = parse_profile(&text).unwrap();
        prop_assert_eq!(&parsed, &profile);
        prop_assert_eq!(serialize_profile(&parsed), text);
    }
}

#[test]
fn generated_profile_matches_golden_file() {
    let spec = CultureSpec::new(5, 10, 0.5, 42).unwrap();
    let text = serialize_profile(&random_profile(&spec).unwrap());
    assert_eq!(text, include_str!("data/culture_m5_n10_p0.5_seed42.txt"));
}

#[test]
fn profiles_can_be_scored_from_several_threads() {
    let p = random_profile(&CultureSpec::new(9, 40, 0.3, 5).unwrap()).unwrap();
    let expected: Vec<_> = RuleId::ALL
        .iter()
        .map(|&rule| winners_any_size(&p, rule, TiePolicy::enumerate_all()).unwrap())
        .collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..4)
            .map(|_| {
                s.spawn(|| {
                    RuleId::ALL
                        .iter()
                        .map(|&rule| {
                            winners_any_size(&p, rule, TiePolicy::enumerate_all()).unwrap()
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), expected);
        }
    });
}
