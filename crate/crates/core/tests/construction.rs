use majority_realize::{
    extend_pair, greedy_transitive_chain, majority_pattern, synthesize, Profile, Ranking, Restrict,
    Tournament,
};

/// Replays the synthesis through the public, relabelling `extend_pair` one
/// step at a time.
fn replay(t: &Tournament) -> Profile {
    let n = t.n();
    let mut chain = greedy_transitive_chain(t).vertices().to_vec();
    if (n - chain.len()) % 2 == 1 {
        chain.pop();
    }
    let mut processed = chain.clone();
    processed.sort_unstable();
    let base = t.restrict(&processed).unwrap().relabeling;
    let seed: Vec<usize> = chain.iter().map(|&v| base.to_new(v).unwrap()).collect();
    let mut profile = Profile::new(chain.len(), vec![Ranking::new(seed).unwrap()]).unwrap();

    let rest: Vec<usize> = (0..n).filter(|v| !chain.contains(v)).collect();
    for pair in rest.chunks(2) {
        let mut ext = processed.clone();
        ext.extend_from_slice(pair);
        let sub = t.restrict(&ext).unwrap();
        let (u, v) = (
            sub.relabeling.to_new(pair[0]).unwrap(),
            sub.relabeling.to_new(pair[1]).unwrap(),
        );
        let (a, b) = if sub.value.beats(u, v) {
            (u, v)
        } else {
            (v, u)
        };
        profile = extend_pair(&sub.value, a, b, &profile).unwrap();
        processed = sub.relabeling.kept().to_vec();
    }
    profile
}

#[test]
fn synthesize_matches_stepwise_extension() {
    for n in 1..=24 {
        for seed in 0..20 {
            let t = Tournament::random(n, seed).unwrap();
            let (fast, _) = synthesize(&t);
            let slow = replay(&t);
            assert_eq!(fast, slow, "n = {n}, seed = {seed}");
            assert_eq!(majority_pattern(&slow).unwrap(), t);
        }
    }
}

#[test]
fn cyclic_triangle_walkthrough() {
    let t = Tournament::cyclic_triangle();
    let (p, rep) = synthesize(&t);
    // greedy [0, 1] is trimmed to [0]; absorbing 1 -> 2, vertex 0 has
    // 2 -> 0 and 0 -> 1, so it is in neither A1 nor A2 (mu)
    let orders: Vec<&[usize]> = p.voters().iter().map(|r| r.order()).collect();
    assert_eq!(rep.steps, vec![(1, 2)]);
    assert_eq!(orders, vec![&[2, 0, 1][..], &[1, 2, 0], &[0, 1, 2]]);
    assert_eq!(majority_pattern(&p).unwrap(), t);
}

#[test]
fn report_fields() {
    let t = Tournament::random(8, 7).unwrap();
    let (p, rep) = synthesize(&t);
    assert_eq!(rep.n, 8);
    assert_eq!(rep.k, 3);
    assert_eq!(rep.bound, 5);
    assert!(p.len() <= 5);
    let greedy = greedy_transitive_chain(&t);
    assert_eq!(rep.greedy_chain_len(), greedy.len());
    assert!(greedy.vertices().starts_with(rep.base_chain.vertices()));
}
