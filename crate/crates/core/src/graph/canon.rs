use std::fmt;

use serde::{Deserialize, Serialize};

use super::{edge_from_index, edge_index, pair_count, Graph};
use crate::error::{Error, Result};

pub const CANONICAL_MAX_N: usize = 8;

/// Isomorphism-class key: the smallest packed edge word reachable by
/// relabeling the vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub(crate) fn from_parts(n: usize, code: u64) -> Self {
        CanonicalForm { n: n as u8, code }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// `[n, code bytes little-endian...]`, trimmed to `ceil(C(n,2)/8)` code bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let len = pair_count(self.n()).div_ceil(8);
        std::iter::once(self.n)
            .chain(self.code.to_le_bytes().into_iter().take(len))
            .collect()
    }

    /// The graph whose packed word is this form.
    pub fn graph(&self) -> Graph {
        Graph::from_edge_bits(self.n(), self.code).expect("canonical code fits its size")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = pair_count(self.n()).div_ceil(4).max(1);
        write!(f, "g{}:{:0width$x}", self.n, self.code, width = width)
    }
}

impl std::str::FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed canonical form {s:?}"));
        let (n, code) = s
            .strip_prefix('g')
            .and_then(|r| r.split_once(':'))
            .ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let code = u64::from_str_radix(code, 16).map_err(|_| bad())?;
        if n == 0 || n > CANONICAL_MAX_N {
            return Err(bad());
        }
        Graph::from_edge_bits(n, code).map_err(|_| bad())?;
        Ok(CanonicalForm::from_parts(n, code))
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// For each vertex permutation, where every edge bit moves to.
pub(crate) struct EdgePermTable {
    maps: Vec<Vec<u8>>,
}

impl EdgePermTable {
    pub(crate) fn new(n: usize) -> Self {
        let pairs = pair_count(n);
        let maps = permutations(n)
            .into_iter()
            .map(|p| {
                (0..pairs)
                    .map(|k| {
                        let (i, j) = edge_from_index(k);
                        edge_index(p[i - 1] + 1, p[j - 1] + 1) as u8
                    })
                    .collect()
            })
            .collect();
        EdgePermTable { maps }
    }

    pub(crate) fn images(&self, word: u64) -> impl Iterator<Item = u64> + '_ {
        self.maps.iter().map(move |map| {
            let mut out = 0u64;
            let mut w = word;
            while w != 0 {
                let k = w.trailing_zeros() as usize;
                out |= 1 << map[k];
                w &= w - 1;
            }
            out
        })
    }
}

/// Minimum packed edge word over all `n!` relabelings.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(Error::SizeLimit {
            what: "canonical_form",
            n,
            min: 1,
            max: CANONICAL_MAX_N,
        });
    }
    let word = g.edge_bits().expect("n <= 8 fits one word");
    let code = EdgePermTable::new(n).images(word).min().unwrap_or(word);
    Ok(CanonicalForm::from_parts(n, code))
}
