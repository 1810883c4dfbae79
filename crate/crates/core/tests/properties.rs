use proptest::collection::vec;
use proptest::prelude::*;

use dyck_query::instances::{gen_random_word, Target};
use dyck_query::search::{grover, MarkedSet};
use dyck_query::{
    balance, balance_range, brute_force_substrings, classical_dyck, decide_dyck, BackendPolicy, CountingOracle,
    Direction, Match, Searcher, Sign, SignSet, SimRng, Word,
};

/// Per-level constant of the cost caps; each recursion level multiplies it.
fn cost_constant(levels: u32) -> f64 {
    5.0 * 150f64.powi(levels as i32)
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    vec(any::<bool>(), 1..=max).prop_map(Word::new)
}

fn signs() -> impl Strategy<Value = SignSet> {
    prop_oneof![Just(SignSet::BOTH), Just(SignSet::PLUS), Just(SignSet::MINUS)]
}

fn sound(w: &Word, k: u32, l: usize, r: usize, s: SignSet, m: &Match) -> bool {
    l <= m.start
        && m.start <= m.end
        && m.end <= r
        && s.contains(m.sign)
        && balance_range(w, m.start, m.end).unwrap() == m.sign.value() * i64::from(k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(w in vec(any::<bool>(), 0..64).prop_map(Word::new)) {
        prop_assert_eq!(Word::parse(&w.to_parens()).unwrap(), w.clone());
        if !w.is_empty() {
            prop_assert_eq!(Word::parse(&w.to_binary()).unwrap(), w);
        }
    }

    #[test]
    fn balance_is_additive(w in word(64), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let mut p = [a.index(w.len()), b.index(w.len()), c.index(w.len())];
        p.sort_unstable();
        let [i, l, j] = p;
        if l < j {
            prop_assert_eq!(
                balance_range(&w, i, j).unwrap(),
                balance_range(&w, i, l).unwrap() + balance_range(&w, l + 1, j).unwrap()
            );
        }
        prop_assert_eq!(balance_range(&w, 0, w.len() - 1).unwrap(), balance(&w));
    }

    #[test]
    fn membership_is_monotone_in_height(w in vec(any::<bool>(), 0..40).prop_map(Word::new), k in 1u32..6) {
        if classical_dyck(&w, k) {
            prop_assert!(classical_dyck(&w, k + 1));
        }
    }

    #[test]
    fn minimal_substrings_are_ordered_and_disjoint(w in word(48), k in 1u32..5) {
        let r = w.len() - 1;
        for sign in [Sign::Plus, Sign::Minus] {
            let ms = brute_force_substrings(&w, k, SignSet::only(sign), 0, r).unwrap();
            for pair in ms.windows(2) {
                prop_assert!(pair[0].start < pair[1].start && pair[0].end < pair[1].end);
            }
        }
        let plus = brute_force_substrings(&w, k, SignSet::PLUS, 0, r).unwrap();
        let minus = brute_force_substrings(&w, k, SignSet::MINUS, 0, r).unwrap();
        for p in &plus {
            for m in &minus {
                prop_assert!(p.end < m.start || m.end < p.start);
            }
        }
    }

    #[test]
    fn oracle_counts_base_reads(w in word(32), pad in 0usize..4, reads in vec(any::<prop::sample::Index>(), 0..64)) {
        let o = CountingOracle::padded(w.clone(), pad);
        let padded = w.padded(pad);
        prop_assert_eq!(balance(&padded), balance(&w));
        let mut base = 0u64;
        for idx in reads {
            let i = idx.index(o.effective_len());
            prop_assert_eq!(o.read(i).unwrap(), padded.bit(i));
            if (pad..pad + w.len()).contains(&i) {
                base += 1;
            }
            prop_assert_eq!(o.charged(), base);
        }
        prop_assert!(o.read(o.effective_len()).is_err());
    }

    #[test]
    fn ideal_grover_respects_cap(len in 1usize..5000, marks in vec(any::<prop::sample::Index>(), 0..8), seed in any::<u64>(), c0 in 0.5f64..4.0) {
        let marked: Vec<usize> = marks.iter().map(|m| m.index(len)).collect();
        let mut pred = MarkedSet::new(len, &marked);
        let policy = BackendPolicy::ideal(seed).with_c0(c0);
        let range = dyck_query::search::IndexRange::new(0, len - 1).unwrap();
        grover(range, &mut pred, &policy, &mut policy.rng()).unwrap();
        prop_assert!(pred.evaluations() <= (c0 * (len as f64).sqrt()).ceil() as u64);
        let exact = policy.with_eps(0.0);
        if let Some(i) = grover(range, &mut pred, &exact, &mut exact.rng()).unwrap() {
            prop_assert!(marked.contains(&i));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routines_are_sound(w in word(96), k in 2u32..4, s in signs(), seed in any::<u64>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), t in any::<prop::sample::Index>()) {
        let (l, r) = {
            let (x, y) = (a.index(w.len()), b.index(w.len()));
            (x.min(y), x.max(y))
        };
        let o = CountingOracle::new(w.clone());
        let policy = BackendPolicy::ideal(seed);
        let searcher = Searcher::new(&o, k, policy).unwrap();
        let mut rng = policy.rng();
        for dir in [Direction::Left, Direction::Right] {
            if let Some(m) = searcher.find_first(k, l, r, s, dir, &mut rng).unwrap() {
                prop_assert!(sound(&w, k, l, r, s, &m));
            }
        }
        if let Some(m) = searcher.find_any(k, l, r, s, &mut rng).unwrap() {
            prop_assert!(sound(&w, k, l, r, s, &m));
        }
        let len = r - l + 1;
        if len >= k as usize {
            if let Some(m) = searcher.find_fixed_len(k, l, r, len, s, &mut rng).unwrap() {
                prop_assert!(sound(&w, k, l, r, s, &m));
            }
            let t = l + t.index(len);
            if let Some(m) = searcher.find_from(k, l, r, t, len, s, &mut rng).unwrap() {
                prop_assert!(sound(&w, k, l, r, s, &m) && m.contains(t) && m.len() <= len);
            }
        }
    }

    #[test]
    fn find_any_cost_cap(n in 8usize..200, k in 2u32..4, seed in any::<u64>(), uniform in any::<bool>()) {
        let target = if uniform { Target::Uniform } else { Target::Member };
        let n = if uniform { n } else { n & !1 };
        let w = gen_random_word(n, k, target, seed).unwrap();
        let o = CountingOracle::new(w);
        let policy = BackendPolicy::ideal(seed);
        let searcher = Searcher::new(&o, k, policy).unwrap();
        searcher.find_any(k, 0, n - 1, SignSet::BOTH, &mut policy.rng()).unwrap();
        let m = n as f64;
        let cap = cost_constant(k - 2) * m.sqrt() * m.log2().powf(0.5 * f64::from(k - 1));
        prop_assert!((o.charged() as f64) <= cap, "{} > {cap}", o.charged());
    }

    #[test]
    fn decide_cost_cap(half in 4usize..128, k in 1u32..3, seed in any::<u64>(), member in any::<bool>()) {
        let n = 2 * half;
        let target = if member { Target::Member } else { Target::Nonmember };
        let w = gen_random_word(n, k, target, seed).unwrap();
        let d = decide_dyck(&w, k, &BackendPolicy::ideal(seed)).unwrap();
        let m = n as f64;
        let cap = cost_constant(k) * m.sqrt() * m.log2().powf(0.5 * f64::from(k));
        prop_assert!((d.charged_queries as f64) <= cap, "{} > {cap}", d.charged_queries);
    }

    #[test]
    fn same_seed_same_trace(w in word(80), k in 1u32..4, seed in any::<u64>()) {
        let policy = BackendPolicy::ideal(seed);
        prop_assert_eq!(decide_dyck(&w, k, &policy).unwrap(), decide_dyck(&w, k, &policy).unwrap());
        let kk = k.max(2);
        let run = || {
            let o = CountingOracle::new(w.clone());
            let searcher = Searcher::new(&o, kk, policy).unwrap();
            let m = searcher.find_first(kk, 0, w.len() - 1, SignSet::BOTH, Direction::Right, &mut policy.rng()).unwrap();
            (m, o.charged())
        };
        prop_assert_eq!(run(), run());
    }

    #[test]
    fn generated_labels_match(n in 1usize..200, k in 1u32..5, seed in any::<u64>(), which in 0u8..3) {
        let target = [Target::Member, Target::Nonmember, Target::Uniform][usize::from(which)];
        let n = if target == Target::Member { (n + 1) & !1 } else { n };
        let w = gen_random_word(n, k, target, seed).unwrap();
        prop_assert_eq!(w.len(), n);
        match target {
            Target::Member => prop_assert!(classical_dyck(&w, k)),
            Target::Nonmember => prop_assert!(!classical_dyck(&w, k)),
            Target::Uniform => {}
        }
    }
}

#[test]
fn sampled_words_are_seeded() {
    let mut a = SimRng::new(4);
    let mut b = SimRng::new(4);
    for n in [2usize, 10, 64] {
        let x = dyck_query::instances::gen_random_word_with(n, 2, Target::Member, &mut a).unwrap();
        let y = dyck_query::instances::gen_random_word_with(n, 2, Target::Member, &mut b).unwrap();
        assert_eq!(x, y);
    }
}
