//! Regular-polygon embedding of the qubits and the chord-midpoint census.
//!
//! Vertex `k` (1-based) sits on the unit circle at angle `2π(k - 1)/n`, so
//! vertex 1 is at `(1, 0)` and labels increase counterclockwise. Every edge
//! is drawn as the straight chord between its endpoints; the census groups
//! coincident chord midpoints and counts how many drawn chords pass through
//! each one.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Absolute tolerance on distances for coincidence and incidence tests.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Gaps in `(tol, AMBIGUITY_FACTOR * tol]` are reported as tolerance instability.
pub const AMBIGUITY_FACTOR: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Unordered chord between two distinct vertices of the `n`-gon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    a: usize,
    b: usize,
    separation: usize,
}

impl Chord {
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidChord { n, a, b });
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let d = b - a;
        Ok(Chord {
            a,
            b,
            separation: d.min(n - d),
        })
    }

    /// Smaller endpoint.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Larger endpoint.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Cyclic distance between the endpoints, in `[1, n/2]`.
    pub fn separation(&self) -> usize {
        self.separation
    }
}

impl Serialize for Chord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tolerance must be positive and finite, got {tol}"
        )))
    }
}

pub fn vertex_position(n: usize, k: usize) -> Point2 {
    let theta = 2.0 * PI * (k - 1) as f64 / n as f64;
    Point2::new(theta.cos(), theta.sin())
}

pub fn embed_polygon(n: usize) -> Result<Vec<Point2>> {
    if n == 0 {
        return Err(Error::InvalidSize(
            "polygon needs at least one vertex".into(),
        ));
    }
    Ok((1..=n).map(|k| vertex_position(n, k)).collect())
}

pub fn chord_midpoint(n: usize, c: &Chord) -> Point2 {
    let p = vertex_position(n, c.a);
    let q = vertex_position(n, c.b);
    Point2::new((p.x + q.x) / 2.0, (p.y + q.y) / 2.0)
}

/// Distance from `p` to the closed segment `[u, v]`.
fn segment_distance(p: Point2, u: Point2, v: Point2) -> f64 {
    let (dx, dy) = (v.x - u.x, v.y - u.y);
    let len2 = dx * dx + dy * dy;
    let t = (((p.x - u.x) * dx + (p.y - u.y) * dy) / len2).clamp(0.0, 1.0);
    p.dist(Point2::new(u.x + t * dx, u.y + t * dy))
}

pub fn chord_distance(p: Point2, c: &Chord, n: usize) -> f64 {
    segment_distance(p, vertex_position(n, c.a), vertex_position(n, c.b))
}

/// Whether `p` lies on the drawn chord `c`, within `tol`.
pub fn point_on_chord(p: Point2, c: &Chord, n: usize, tol: f64) -> bool {
    chord_distance(p, c, n) <= tol
}

/// Chords between consecutive labels `k, k + 1` (wrapping `n` to 1).
pub fn consecutive_chords(n: usize) -> Vec<Chord> {
    let set: BTreeSet<Chord> = (1..=n)
        .filter_map(|k| Chord::new(n, k, k % n + 1).ok())
        .collect();
    set.into_iter().collect()
}

pub fn all_chords(n: usize) -> Vec<Chord> {
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .map(|(a, b)| Chord::new(n, a, b).expect("a < b <= n"))
        .collect()
}

/// Which chords are drawn: every chord, or the edges of one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Restriction {
    Complete,
    EdgeSet(Graph),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MidpointKind {
    Primary,
    Secondary,
    Center,
}

#[derive(Clone, Debug, Serialize)]
pub struct MidpointRecord {
    pub id: usize,
    pub position: Point2,
    pub kind: MidpointKind,
    /// Drawn chords whose midpoint is this position.
    pub generators: Vec<Chord>,
    /// Every chord (drawn or not) whose midpoint is this position; for a
    /// graph census this keeps primary positions of absent edges.
    pub sites: Vec<Chord>,
    /// Drawn chords passing through this position.
    pub incident_chords: Vec<Chord>,
    pub degree: usize,
    pub multiplicity: usize,
    pub ring_radius: f64,
    pub ring: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Ring {
    pub index: usize,
    pub radius: f64,
    pub is_center: bool,
    pub members: Vec<usize>,
    /// Separations of the chords whose midpoints form this ring.
    pub separations: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MidpointCensus {
    pub n: usize,
    pub restriction: Restriction,
    pub tol: f64,
    pub records: Vec<MidpointRecord>,
    /// Outermost first; the center, when present, is last.
    pub rings: Vec<Ring>,
}

/// Degree shared by a ring's members, or the spread when they disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "type")]
pub enum RingDegree {
    Uniform { degree: usize },
    Mixed { min: usize, max: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RingProfileEntry {
    pub ring: usize,
    pub radius: f64,
    pub size: usize,
    pub is_center: bool,
    pub degree: RingDegree,
}

impl MidpointCensus {
    pub fn record(&self, id: usize) -> &MidpointRecord {
        &self.records[id - 1]
    }

    pub fn center(&self) -> Option<&MidpointRecord> {
        self.records.iter().find(|r| r.kind == MidpointKind::Center)
    }

    pub fn is_complete(&self) -> bool {
        self.restriction == Restriction::Complete
    }

    /// Count of records per degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for r in &self.records {
            *h.entry(r.degree).or_insert(0) += 1;
        }
        h
    }

    /// Sorted multiset of `(ring index, degree)`; stable under rotating labels.
    pub fn ring_degree_multiset(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.records.iter().map(|r| (r.ring, r.degree)).collect();
        v.sort_unstable();
        v
    }

    pub fn ring_summaries(&self) -> Vec<RingProfileEntry> {
        self.rings
            .iter()
            .map(|ring| {
                let degrees = ring.members.iter().map(|&id| self.record(id).degree);
                let min = degrees.clone().min().unwrap_or(0);
                let max = degrees.max().unwrap_or(0);
                RingProfileEntry {
                    ring: ring.index,
                    radius: ring.radius,
                    size: ring.members.len(),
                    is_center: ring.is_center,
                    degree: if min == max {
                        RingDegree::Uniform { degree: min }
                    } else {
                        RingDegree::Mixed { min, max }
                    },
                }
            })
            .collect()
    }
}

pub fn build_midpoint_census(n: usize, restriction: Restriction) -> Result<MidpointCensus> {
    build_midpoint_census_with_tol(n, restriction, DEFAULT_TOL)
}

pub fn build_midpoint_census_with_tol(
    n: usize,
    restriction: Restriction,
    tol: f64,
) -> Result<MidpointCensus> {
    check_tol(tol)?;
    if n < 2 {
        return Err(Error::InvalidSize(format!("census needs n >= 2, got {n}")));
    }
    let (drawn, sites): (Vec<Chord>, Vec<Chord>) = match &restriction {
        Restriction::Complete => (all_chords(n), all_chords(n)),
        Restriction::EdgeSet(g) => {
            if g.n() != n {
                return Err(Error::Inconsistency(format!(
                    "graph has {} vertices, census asked for {n}",
                    g.n()
                )));
            }
            let drawn: Vec<Chord> = g
                .edges()
                .into_iter()
                .map(|(a, b)| Chord::new(n, a, b))
                .collect::<Result<_>>()?;
            let mut sites: BTreeSet<Chord> = drawn.iter().copied().collect();
            sites.extend(consecutive_chords(n));
            (drawn, sites.into_iter().collect())
        }
    };
    let margin = AMBIGUITY_FACTOR * tol;

    // Group coincident midpoints.
    let mut clusters: Vec<(Point2, Vec<Chord>)> = Vec::new();
    for &c in &sites {
        let p = chord_midpoint(n, &c);
        match clusters.iter_mut().find(|(q, _)| q.dist(p) <= tol) {
            Some((_, members)) => members.push(c),
            None => clusters.push((p, vec![c])),
        }
    }
    for (i, (p, _)) in clusters.iter().enumerate() {
        for (q, _) in &clusters[i + 1..] {
            let d = p.dist(*q);
            if d <= margin {
                return Err(Error::CoincidenceAmbiguity {
                    n,
                    detail: "two midpoint clusters nearly coincide".into(),
                    distance: d,
                    tol,
                });
            }
        }
    }

    // Rings: group by radius, outermost first.
    let mut order: Vec<usize> = (0..clusters.len()).collect();
    order.sort_by(|&i, &j| {
        clusters[j]
            .0
            .norm()
            .total_cmp(&clusters[i].0.norm())
            .then_with(|| clusters[i].1[0].cmp(&clusters[j].1[0]))
    });
    let mut ring_of = vec![0usize; clusters.len()];
    let mut ring_radii: Vec<f64> = Vec::new();
    for &ci in &order {
        let r = clusters[ci].0.norm();
        match ring_radii.last() {
            Some(&last) if (last - r).abs() <= tol => {}
            Some(&last) if (last - r).abs() <= margin => {
                return Err(Error::CoincidenceAmbiguity {
                    n,
                    detail: "two ring radii nearly coincide".into(),
                    distance: (last - r).abs(),
                    tol,
                });
            }
            _ => ring_radii.push(r),
        }
        ring_of[ci] = ring_radii.len() - 1;
    }
    order.sort_by_key(|&ci| (ring_of[ci], clusters[ci].1[0]));

    let drawn_set: BTreeSet<Chord> = drawn.iter().copied().collect();
    let mut records = Vec::with_capacity(order.len());
    for (slot, &ci) in order.iter().enumerate() {
        let (p, site_chords) = &clusters[ci];
        let mut incident = Vec::new();
        for c in &drawn {
            let d = chord_distance(*p, c, n);
            if d <= tol {
                incident.push(*c);
            } else if d <= margin {
                return Err(Error::CoincidenceAmbiguity {
                    n,
                    detail: format!("chord ({}, {}) grazes a midpoint", c.a, c.b),
                    distance: d,
                    tol,
                });
            }
        }
        let generators: Vec<Chord> = site_chords
            .iter()
            .copied()
            .filter(|c| drawn_set.contains(c))
            .collect();
        let kind = if p.norm() <= tol {
            MidpointKind::Center
        } else if site_chords.iter().any(|c| c.separation == 1) {
            MidpointKind::Primary
        } else {
            MidpointKind::Secondary
        };
        records.push(MidpointRecord {
            id: slot + 1,
            position: *p,
            kind,
            generators,
            sites: site_chords.clone(),
            degree: 2 * incident.len(),
            multiplicity: incident.len(),
            incident_chords: incident,
            ring_radius: p.norm(),
            ring: ring_of[ci],
        });
    }

    let rings = ring_radii
        .iter()
        .enumerate()
        .map(|(index, &radius)| {
            let members: Vec<usize> = records
                .iter()
                .filter(|r| r.ring == index)
                .map(|r| r.id)
                .collect();
            let separations: BTreeSet<usize> = members
                .iter()
                .flat_map(|&id| records[id - 1].sites.iter().map(|c| c.separation))
                .collect();
            Ring {
                index,
                radius,
                is_center: radius <= tol,
                members,
                separations: separations.into_iter().collect(),
            }
        })
        .collect();

    Ok(MidpointCensus {
        n,
        restriction,
        tol,
        records,
        rings,
    })
}

/// Per-ring degree profile of a complete even-`n` census, outermost ring
/// first and the center last.
pub fn ring_degree_profile(census: &MidpointCensus) -> Result<Vec<RingProfileEntry>> {
    if census.n % 2 == 1 {
        return Err(Error::UnsupportedParity(format!(
            "ring profile is defined for even n, got {}",
            census.n
        )));
    }
    if !census.is_complete() {
        return Err(Error::Domain("ring profile needs a complete census".into()));
    }
    Ok(census.ring_summaries())
}
