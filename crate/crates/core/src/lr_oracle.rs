//! Brute-force Littlewood–Richardson coefficients.
//!
//! `c^ν_{λμ}` counts semistandard skew tableaux of shape `ν/λ` and content
//! `μ` whose reverse reading word (rows right to left, top row first) is a
//! lattice word. This module is the ground truth the chamber formulas and
//! the symmetry group are checked against, so it deliberately shares no code
//! with them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers; trailing zeros are
/// stripped so `(2,1,0)` and `(2,1)` compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `None` when the sequence has a negative entry or increases somewhere.
    pub fn from_signed(parts: &[i64]) -> Option<Self> {
        let parts: Vec<u32> = parts
            .iter()
            .map(|&p| u32::try_from(p).ok())
            .collect::<Option<_>>()?;
        Partition::new(parts).ok()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && (0..self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// The 180° rotated complement inside a `height × width` rectangle, or
    /// `None` if the diagram does not fit.
    pub fn complement(&self, height: usize, width: u32) -> Option<Partition> {
        if self.len() > height || self.part(0) > width {
            return None;
        }
        let parts: Vec<u32> = (0..height).rev().map(|i| width - self.part(i)).collect();
        Partition::new(parts).ok()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filling of the skew shape `outer/inner`. `rows[i]` holds the entries
/// of columns `inner_i .. outer_i` of row `i`; cells of `inner` are absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LrTableau {
    pub inner: Partition,
    pub outer: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl LrTableau {
    /// Reverse reading word: rows right to left, top row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }
}

pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut count = 0u64;
    search(lam, mu, nu, &mut |_| count += 1);
    count
}

pub fn enumerate_lr_tableaux(lam: &Partition, mu: &Partition, nu: &Partition) -> Vec<LrTableau> {
    let mut out = Vec::new();
    search(lam, mu, nu, &mut |rows| {
        out.push(LrTableau {
            inner: lam.clone(),
            outer: nu.clone(),
            rows: rows.to_vec(),
        })
    });
    out
}

/// Coefficient of a triple given by possibly-invalid integer sequences;
/// anything that is not a partition contributes zero.
pub fn lr_coefficient_signed(lam: &[i64], mu: &[i64], nu: &[i64]) -> u64 {
    match (
        Partition::from_signed(lam),
        Partition::from_signed(mu),
        Partition::from_signed(nu),
    ) {
        (Some(l), Some(m), Some(n)) => lr_coefficient(&l, &m, &n),
        _ => 0,
    }
}

struct Search<'a> {
    inner: &'a Partition,
    outer: &'a Partition,
    content: &'a [u32],
    rows: Vec<Vec<u32>>,
    // counts[k] = occurrences of letter k+1 placed so far
    counts: Vec<u32>,
}

fn search(lam: &Partition, mu: &Partition, nu: &Partition, visit: &mut dyn FnMut(&[Vec<u32>])) {
    if lam.weight() + mu.weight() != nu.weight() || !lam.is_contained_in(nu) {
        return;
    }
    let rows = (0..nu.len())
        .map(|i| vec![0; (nu.part(i) - lam.part(i)) as usize])
        .collect();
    let mut s = Search {
        inner: lam,
        outer: nu,
        content: mu.parts(),
        rows,
        counts: vec![0; mu.len()],
    };
    s.fill(0, nu.part(0), visit);
}

impl Search<'_> {
    // Cells are visited in reading order: each row from its rightmost cell
    // leftwards, rows top to bottom. `col` is one past the next cell.
    fn fill(&mut self, row: usize, col: u32, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if row == self.outer.len() {
            visit(&self.rows);
            return;
        }
        let start = self.inner.part(row);
        if col == start {
            let next_col = self.outer.part(row + 1);
            self.fill(row + 1, next_col, visit);
            return;
        }
        let c = col - 1;
        let idx = (c - start) as usize;

        // Row weakly increases to the right.
        let max = if col < self.outer.part(row) {
            self.rows[row][idx + 1]
        } else {
            self.content.len() as u32
        };
        // Column strictly increases downwards; cells of the inner shape impose nothing.
        let min = if row > 0 && c >= self.inner.part(row - 1) {
            self.rows[row - 1][(c - self.inner.part(row - 1)) as usize] + 1
        } else {
            1
        };

        for letter in min..=max {
            let k = (letter - 1) as usize;
            if self.counts[k] == self.content[k] {
                continue;
            }
            if k > 0 && self.counts[k] == self.counts[k - 1] {
                continue;
            }
            self.counts[k] += 1;
            self.rows[row][idx] = letter;
            self.fill(row, c, visit);
            self.counts[k] -= 1;
        }
        self.rows[row][idx] = 0;
    }
}
