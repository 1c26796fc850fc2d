//! Geometric census invariants over the complete-graph embedding.

use entmat_core::geometry::{
    build_midpoint_census, build_midpoint_census_with_tol, MidpointKind, Restriction, DEFAULT_TOL,
};
use entmat_core::Graph;

#[test]
fn midpoint_counts_and_degrees() {
    for n in 3..=30 {
        let c = build_midpoint_census(n, Restriction::Complete).unwrap();
        if n % 2 == 1 {
            assert_eq!(c.records.len(), n * (n - 1) / 2, "n = {n}");
            assert!(c.records.iter().all(|r| r.degree == 2), "n = {n}");
            assert!(c.center().is_none());
        } else {
            assert_eq!(c.records.len(), n * (n / 2 - 1) + 1, "n = {n}");
            let centers: Vec<_> = c
                .records
                .iter()
                .filter(|r| r.kind == MidpointKind::Center)
                .collect();
            assert_eq!(centers.len(), 1);
            assert_eq!(centers[0].degree, n);
            for ring in c.rings.iter().filter(|r| !r.is_center) {
                assert_eq!(ring.members.len(), n, "n = {n} ring {}", ring.index);
            }
        }
        for r in &c.records {
            assert!(r.degree >= 2 && r.degree % 2 == 0);
            assert!(r.generators.iter().all(|g| r.incident_chords.contains(g)));
            if r.kind == MidpointKind::Primary {
                assert_eq!(
                    r.degree, 2,
                    "n = {n}: primary {} meets {:?}",
                    r.id, r.incident_chords
                );
            }
        }
    }
}

#[test]
fn positions_are_distinct() {
    for n in [7, 12, 24] {
        let c = build_midpoint_census(n, Restriction::Complete).unwrap();
        for (i, a) in c.records.iter().enumerate() {
            for b in &c.records[i + 1..] {
                assert!(a.position.dist(b.position) > DEFAULT_TOL);
            }
        }
    }
}

#[test]
fn tolerance_robustness() {
    for n in 3..=30 {
        let base = build_midpoint_census(n, Restriction::Complete).unwrap();
        for tol in [DEFAULT_TOL / 10.0, DEFAULT_TOL * 10.0] {
            let other = build_midpoint_census_with_tol(n, Restriction::Complete, tol).unwrap();
            assert_eq!(
                other.degree_histogram(),
                base.degree_histogram(),
                "n = {n}, tol = {tol}"
            );
            assert_eq!(other.ring_degree_multiset(), base.ring_degree_multiset());
        }
    }
}

#[test]
fn rotation_preserves_ring_degrees() {
    for n in [5, 6, 9, 12] {
        let g = Graph::new(n, &[(1, 2), (1, 3), (2, 5), (3, n), (4, n)]).unwrap();
        let rotate: Vec<usize> = (1..=n).map(|v| v % n + 1).collect();
        let h = g.relabeled(&rotate).unwrap();
        let a = build_midpoint_census(n, Restriction::EdgeSet(g)).unwrap();
        let b = build_midpoint_census(n, Restriction::EdgeSet(h)).unwrap();
        assert_eq!(
            a.ring_degree_multiset(),
            b.ring_degree_multiset(),
            "n = {n}"
        );
    }
}

#[test]
fn even_parity_rule() {
    for n in (4..=30).step_by(2).filter(|n| n % 12 != 0) {
        let c = build_midpoint_census(n, Restriction::Complete).unwrap();
        for ring in c.rings.iter().filter(|r| !r.is_center) {
            assert_eq!(ring.separations.len(), 1);
            let expect = if ring.separations[0] % 2 == 0 { 4 } else { 2 };
            for &id in &ring.members {
                assert_eq!(c.record(id).degree, expect, "n = {n} ring {}", ring.index);
            }
        }
    }
}

#[test]
fn multiples_of_twelve_replace_one_ring() {
    for (n, from, to) in [(12, 2, 6), (24, 4, 8), (36, 2, 6), (48, 4, 8)] {
        let c = build_midpoint_census(n, Restriction::Complete).unwrap();
        let odd_rule = |sep: usize| if sep.is_multiple_of(2) { 4 } else { 2 };
        let changed: Vec<_> = c
            .rings
            .iter()
            .filter(|r| !r.is_center)
            .filter(|r| c.record(r.members[0]).degree != odd_rule(r.separations[0]))
            .collect();
        assert_eq!(changed.len(), 1, "n = {n}");
        let ring = changed[0];
        assert_eq!(odd_rule(ring.separations[0]), from);
        assert!(ring.members.iter().all(|&id| c.record(id).degree == to));
        assert_eq!(ring.members.len(), n);
    }
}
