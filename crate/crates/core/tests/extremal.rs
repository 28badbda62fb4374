mod common;

use bicolor::extremal::{
    extremal_route, extremal_route_with_state, find_witness, find_witness_rounded,
    red_edges_across, separator_partition, verify_witness, verify_witness_rounded, ExtremalError,
    ExtremalWitness, SeparatorOutcome,
};
use bicolor::families::{gen_large_deg, large_deg_parts};
use bicolor::routes::{longest_mono_cycle_exact, longest_mono_path_exact, DEFAULT_SEARCH_CAP};
use bicolor::{Color, ColoredBigraph, Params, Rational, Side, VertexSet, Witness};
use proptest::prelude::*;
use rand::Rng;

fn zero() -> Rational {
    Rational::from_integer(0)
}

fn quarter() -> Params {
    Params::new(Rational::new(1, 4), zero())
}

fn canonical(n: usize) -> (ColoredBigraph, Witness) {
    let (g, _) = gen_large_deg(n).unwrap();
    let ([x1, _], [y1, y2]) = large_deg_parts(n);
    (g, ExtremalWitness::new(Side::X, x1, y1, y2, zero()))
}

fn check_certificate(g: &ColoredBigraph, n: usize, cert: &bicolor::extremal::RouteCertificate) {
    assert!(cert.cycle.validate(g));
    assert!(cert.path.validate(g));
    assert!(cert.cycle.length >= 2 * (n / 2));
    assert!(cert.path.order >= 2 * n.div_ceil(2));
}

#[test]
fn canonical_witnesses_route() {
    for n in [12, 13, 16] {
        let (g, w) = canonical(n);
        let cert = extremal_route(&g, &w, &quarter()).unwrap();
        check_certificate(&g, n, &cert);
        if n <= 12 {
            let best = longest_mono_cycle_exact(&g, DEFAULT_SEARCH_CAP)
                .unwrap()
                .unwrap();
            assert!(best.length >= cert.cycle.length);
            let path = longest_mono_path_exact(&g, DEFAULT_SEARCH_CAP).unwrap();
            assert!(path.order >= cert.path.order);
        }
    }
}

#[test]
fn every_found_witness_routes() {
    for n in 12..=16 {
        let (g, _) = canonical(n);
        let strict = find_witness(&g, zero());
        // |Y1|, |Y2| >= n/2 forces even n
        assert_eq!(strict.is_some(), n % 2 == 0);
        let w = find_witness_rounded(&g, zero()).expect("block structure gives a witness");
        assert!(verify_witness_rounded(&g, &w).unwrap());
        let cert = extremal_route(&g, &w, &quarter()).unwrap();
        check_certificate(&g, n, &cert);
    }
}

#[test]
fn relabeled_instances_route() {
    // relabeling and exchanging colors or sides must not change the outcome class
    let (g, w) = canonical(12);
    let mut r = common::rng(3);
    for _ in 0..10 {
        let mut px: Vec<usize> = (0..12).collect();
        let mut py: Vec<usize> = (0..12).collect();
        for i in (1..12).rev() {
            px.swap(i, r.gen_range(0..=i));
            py.swap(i, r.gen_range(0..=i));
        }
        let h = g.relabeled(&px, &py);
        let hw = ExtremalWitness::new(
            Side::X,
            w.xprime.permute(&px),
            w.y1.permute(&py),
            w.y2.permute(&py),
            zero(),
        );
        check_certificate(&h, 12, &extremal_route(&h, &hw, &quarter()).unwrap());
        let hs = h.colors_swapped();
        check_certificate(
            &hs,
            12,
            &extremal_route(&hs, &hw.colors_swapped(), &quarter()).unwrap(),
        );
        let ht = h.transposed();
        check_certificate(
            &ht,
            12,
            &extremal_route(&ht, &hw.transposed(), &quarter()).unwrap(),
        );
    }
}

#[test]
fn perturbed_instances_route() {
    // recoloring one edge at X2 leaves the witness and the degrees intact
    let (g, w) = canonical(12);
    let ([_, x2], _) = large_deg_parts(12);
    let mut r = common::rng(11);
    for _ in 0..20 {
        let mut h = g.clone();
        let x = x2.iter().nth(r.gen_range(0..x2.len())).unwrap();
        let y = r.gen_range(0..12);
        let c = if h.has_edge(x, y, Color::Red) {
            Color::Red
        } else {
            Color::Blue
        };
        h.remove_edge(x, y, c);
        h.add_edge(x, y, c.other());
        assert!(verify_witness(&h, &w).unwrap());
        let cert = extremal_route(&h, &w, &quarter()).unwrap();
        check_certificate(&h, 12, &cert);
    }
}

#[test]
fn state_sets_partition_the_sides() {
    let (g, w) = canonical(16);
    let (_, st) = extremal_route_with_state(&g, &w, &quarter()).unwrap();
    let full = VertexSet::full(16);
    assert_eq!(st.x1p.union(st.x2p), full);
    assert!(st.x1p.is_disjoint(st.x2p));
    assert_eq!(st.y1p.union(st.y2p), full);
    assert!(st.y1s.is_empty() && st.y2s.is_empty() && st.x1s.is_empty());
}

#[test]
fn degree_deficit_is_a_precondition() {
    let (mut g, w) = canonical(12);
    g.remove_edge(3, 3, Color::Blue);
    g.remove_edge(3, 3, Color::Red);
    match extremal_route(&g, &w, &quarter()) {
        Err(e @ ExtremalError::Precondition(_)) => {
            assert_eq!(e.class(), "precondition");
            assert!(e.to_string().contains("deficit"), "{e}");
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn separator_splits_large_deg() {
    let (g, _) = canonical(12);
    let ([x1, x2], [y1, y2]) = large_deg_parts(12);
    let pair = |xs, ys| bicolor::extremal::BiConnectedPair {
        xs,
        ys,
        color: Color::Red,
        excluded_x: VertexSet::EMPTY,
        excluded_y: VertexSet::EMPTY,
    };
    match separator_partition(&g, &pair(x1, y2), &pair(x2, y1)).unwrap() {
        SeparatorOutcome::Separated { w: None, hats } => assert_eq!(red_edges_across(&g, &hats), 0),
        other => panic!("unexpected {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witness_acceptance_is_monotone_in_eta(seed in 0u64..10_000, num in 0i64..20) {
        let mut r = common::rng(seed);
        let n = r.gen_range(2..=7);
        let g = common::random_graph(n, 0.5, 0.5, &mut r);
        let xprime: VertexSet = (0..n).filter(|_| r.gen_bool(0.6)).collect();
        let y1: VertexSet = (0..n).filter(|_| r.gen_bool(0.5)).collect();
        let y2 = VertexSet::full(n).difference(y1);
        let lo = Rational::new(num, 40);
        let w = ExtremalWitness::new(Side::X, xprime, y1, y2, lo);
        if verify_witness(&g, &w).unwrap() {
            for bump in 1..4 {
                let hi = w.with_eta(lo + Rational::new(bump, 40));
                prop_assert!(verify_witness(&g, &hi).unwrap());
            }
        }
    }

    #[test]
    fn found_witnesses_verify(seed in 0u64..10_000, num in 0i64..10) {
        let mut r = common::rng(seed);
        let n = r.gen_range(2..=8);
        let g = common::random_graph(n, 0.6, 0.4, &mut r);
        let eta = Rational::new(num, 40);
        if let Some(w) = find_witness(&g, eta) {
            prop_assert!(verify_witness(&g, &w).unwrap());
            prop_assert_eq!(w.eta, eta);
        }
    }
}

/// `X'×Y1` blue, `X'×Y2` red, every other pair a random nonempty color set.
fn planted(n: usize, xp: usize, y1: usize, r: &mut impl Rng) -> (ColoredBigraph, Witness) {
    let (xs, ys) = (VertexSet::full(xp), VertexSet::full(y1));
    let g = ColoredBigraph::from_fn(n, |x, y| {
        if xs.contains(x) {
            (!ys.contains(y), ys.contains(y))
        } else {
            match r.gen_range(0..3) {
                0 => (true, false),
                1 => (false, true),
                _ => (true, true),
            }
        }
    })
    .unwrap();
    let w = ExtremalWitness::new(Side::X, xs, ys, VertexSet::full(n).difference(ys), zero());
    (g, w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn planted_witnesses_never_hit_a_bug(seed in 0u64..1_000_000, n in 12usize..=16) {
        let mut r = common::rng(seed);
        let xp = r.gen_range(n / 2..=n);
        let y1 = r.gen_range(n / 2..=n.div_ceil(2));
        let (g, w) = planted(n, xp, y1, &mut r);
        match extremal_route(&g, &w, &quarter()) {
            Ok(cert) => check_certificate(&g, n, &cert),
            Err(ExtremalError::Bug(m)) => prop_assert!(false, "bug: {m}"),
            Err(ExtremalError::Precondition(m)) => {
                // only the witness or degree clauses can fail here
                prop_assert!(m.contains("extremal") || m.contains("degree"), "{m}");
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
