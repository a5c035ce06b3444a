use moykit::mf::{graph_gdim_with, graph_mf, verify_gdim_equals_bracket, Reduction};
use moykit::moy::{parse, random_closed_word, RandomWordConfig, SliceWord};
use moykit::qpoly::{specialize_tau, LaurentPoly};
use moykit::statesum::bracket_dp;
use moykit::symfunc::grassmannian_dim;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(seed: u64, max_color: u32) -> SliceWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = RandomWordConfig { max_events: 6, max_color, ..Default::default() };
    random_closed_word(&mut rng, &cfg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn graph_potential_vanishes(seed: u64, n in 1u32..=3, extra in 0usize..2) {
        let w = word(seed, 3);
        let mf = graph_mf(&w, n, extra).unwrap();
        prop_assert!(mf.potential().is_zero());
        prop_assert!(mf.degrees_consistent());
        if mf.rows.len() <= 8 {
            prop_assert!(mf.check_d_squared());
        }
    }

    #[test]
    fn homology_matches_bracket(seed: u64, n in 1u32..=3) {
        let w = word(seed, n.max(2));
        let r = verify_gdim_equals_bracket(&w, n, None).unwrap();
        prop_assert!(r.ok(), "{:?}", r);
    }

    #[test]
    fn marking_and_reduction_independence(seed: u64, n in 1u32..=2) {
        let w = word(seed, 2);
        let base = graph_gdim_with(&w, n, None, 0, Reduction::Full).unwrap();
        prop_assert_eq!(&graph_gdim_with(&w, n, None, 1, Reduction::Full).unwrap(), &base);
        prop_assert_eq!(&graph_gdim_with(&w, n, None, 0, Reduction::Linear).unwrap(), &base);
    }
}

#[test]
fn unreduced_homology_on_small_graphs() {
    for src in ["cup 1 ccw @0\ncap 1 ccw @0", "cup 2 cw @0\nsplit 1 1 @0\nmerge 1 1 @0\ncap 2 cw @0"] {
        let w = parse(src).unwrap();
        for n in 1..=2 {
            let direct = graph_gdim_with(&w, n, None, 0, Reduction::None).unwrap();
            assert_eq!(direct, graph_gdim_with(&w, n, None, 0, Reduction::Full).unwrap());
            assert_eq!(specialize_tau(&direct, 1), bracket_dp(&w, n).unwrap());
        }
    }
}

#[test]
fn circle_homology_is_a_shifted_grassmannian() {
    for n in 1..=4u32 {
        for m in 0..=n {
            let c = parse(&format!("cup {m} ccw @0\ncap {m} ccw @0")).unwrap();
            let g = graph_gdim_with(&c, n, None, 0, Reduction::Full).unwrap();
            let grass = grassmannian_dim(m as usize, n as usize).unwrap();
            let shifted = grass.even.shift(-((m * (n - m)) as i64));
            assert_eq!(specialize_tau(&g, 1), shifted, "N={n} m={m}");
            // a counterclockwise circle sits entirely in τ-degree m
            assert!(g.part((m % 2) as u8 ^ 1).is_zero(), "N={n} m={m}");
        }
    }
}

#[test]
fn wide_vertices_kill_homology() {
    for n in 1..=3u32 {
        let w = parse(&format!("cup {c} ccw @0\nsplit 1 {n} @1\nmerge 1 {n} @1\ncap {c} ccw @0", c = n + 1)).unwrap();
        let g = graph_gdim_with(&w, n, Some(30), 0, Reduction::None).unwrap();
        assert!(g.is_zero(), "N={n}");
    }
    assert_eq!(
        specialize_tau(&graph_gdim_with(&SliceWord::default(), 2, None, 0, Reduction::None).unwrap(), 1),
        LaurentPoly::one()
    );
}
