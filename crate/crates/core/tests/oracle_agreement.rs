//! Cross-checks of the fast algorithms against the exhaustive reference
//! paths, on instances small enough to enumerate.

use edgeclass::coloring::{
    chromatic_index_exact, classify, is_proper, vizing_color, ClassLabel, SearchBudget,
};
use edgeclass::graph::Graph;
use edgeclass::matching::{
    is_matching, matching_number, maximum_matching, oracle_matching_number, OracleCutoff,
};
use edgeclass::oracle;

#[test]
fn matching_number_agrees_with_oracle() {
    let cutoff = OracleCutoff::default();
    let mut compared = 0;
    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 11);
        let p = 0.1 + 0.08 * ((seed % 10) as f64);
        let g = Graph::random(n, p, seed.wrapping_mul(0x9e37));
        let fast = matching_number(&g);
        let slow = oracle_matching_number(&g, cutoff).expect("within cutoff");
        assert_eq!(fast, slow, "alpha' mismatch on seed {seed}");
        assert!(fast <= g.order() / 2);
        compared += 1;
    }
    assert!(compared >= 200);
}

#[test]
fn maximum_matching_is_always_a_matching() {
    for seed in 300..380u64 {
        let g = Graph::random(4 + (seed as usize % 20), 0.3, seed);
        let m = maximum_matching(&g);
        assert!(is_matching(&g, m.edges()));
        assert!(m.verify(&g));
    }
}

#[test]
fn chromatic_index_agrees_with_enumeration_up_to_order_ten() {
    let budget = SearchBudget::default();
    let mut compared = 0;
    for seed in 0..160u64 {
        let n = 2 + (seed as usize % 9); // 2..=10
        let p = 0.15 + 0.1 * ((seed % 7) as f64);
        let g = Graph::random(n, p, seed.wrapping_mul(77));
        if g.size() == 0 {
            continue;
        }
        let slow = match oracle::chromatic_index(&g, 26) {
            Ok(chi) => chi,
            Err(_) => continue, // too dense for plain enumeration
        };
        let fast = chromatic_index_exact(&g, &budget).expect("within budget");
        assert_eq!(fast, slow, "chi' mismatch on seed {seed}");
        compared += 1;
    }
    assert!(compared >= 120, "only {compared} instances compared");
}

#[test]
fn chromatic_index_known_values_come_from_the_oracle() {
    let budget = SearchBudget::default();
    for (g, name) in [
        (Graph::complete(4), "K4"),
        (Graph::cycle(5), "C5"),
        (Graph::petersen(), "Petersen"),
    ] {
        let slow = oracle::chromatic_index(&g, 30).expect("within oracle cap");
        let fast = chromatic_index_exact(&g, &budget).expect("within budget");
        assert_eq!(fast, slow, "decider disagrees with enumeration on {name}");
    }
}

#[test]
fn classification_is_consistent_with_the_decider() {
    let budget = SearchBudget::default();
    for seed in 0..120u64 {
        let g = Graph::random(3 + (seed as usize % 8), 0.45, seed ^ 0xf00d);
        if g.size() == 0 {
            continue;
        }
        let chi = chromatic_index_exact(&g, &budget).unwrap();
        match classify(&g, &budget).unwrap() {
            ClassLabel::One(w) => {
                assert_eq!(chi, g.max_degree());
                assert!(is_proper(&g, &w));
            }
            ClassLabel::Two(_) => assert_eq!(chi, g.max_degree() + 1),
        }
    }
}

#[test]
fn vizing_witnesses_the_upper_bound_everywhere() {
    for seed in 500..700u64 {
        let g = Graph::random(2 + (seed as usize % 30), 0.2, seed);
        if g.size() == 0 {
            continue;
        }
        let c = vizing_color(&g).unwrap();
        assert!(is_proper(&g, &c));
        assert!(c.palette() <= g.max_degree() + 1);
    }
}
