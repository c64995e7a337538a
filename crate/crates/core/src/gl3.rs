//! GL₃ triples: reduction to the SL₃ function and the extra GL₃ symmetry.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chamber::LrPoint;
use crate::error::{Error, Result};
use crate::lr_oracle;

/// `(λ, μ, ν)` with three parts each; serializes as `[[3 ints],[3 ints],[3 ints]]`.
///
/// Components are not required to be partitions so that the image of a map
/// can be represented; such triples have coefficient zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[[i64; 3]; 3]", into = "[[i64; 3]; 3]")]
pub struct Gl3Triple {
    pub lam: [i64; 3],
    pub mu: [i64; 3],
    pub nu: [i64; 3],
}

impl From<[[i64; 3]; 3]> for Gl3Triple {
    fn from([lam, mu, nu]: [[i64; 3]; 3]) -> Self {
        Gl3Triple { lam, mu, nu }
    }
}

impl From<Gl3Triple> for [[i64; 3]; 3] {
    fn from(t: Gl3Triple) -> Self {
        [t.lam, t.mu, t.nu]
    }
}

impl std::fmt::Display for Gl3Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [l, m, n] = [self.lam, self.mu, self.nu];
        write!(
            f,
            "(({},{},{}),({},{},{}),({},{},{}))",
            l[0], l[1], l[2], m[0], m[1], m[2], n[0], n[1], n[2]
        )
    }
}

fn is_partition(p: &[i64; 3]) -> bool {
    p[0] >= p[1] && p[1] >= p[2] && p[2] >= 0
}

impl Gl3Triple {
    pub fn new(lam: [i64; 3], mu: [i64; 3], nu: [i64; 3]) -> Self {
        Gl3Triple { lam, mu, nu }
    }

    pub fn is_valid(&self) -> bool {
        is_partition(&self.lam) && is_partition(&self.mu) && is_partition(&self.nu)
    }

    /// `|ν| = |λ| + |μ|`; unbalanced triples have coefficient zero.
    pub fn is_balanced(&self) -> bool {
        self.nu.iter().sum::<i64>() == self.lam.iter().sum::<i64>() + self.mu.iter().sum::<i64>()
    }

    /// LR coefficient by the tableau oracle; zero for invalid triples.
    pub fn coefficient(&self) -> u64 {
        if !self.is_valid() {
            return 0;
        }
        lr_oracle::lr_coefficient_signed(&self.lam, &self.mu, &self.nu)
    }
}

/// Strips full columns: `λ − λ₃`, `μ − μ₃`, `ν − (λ₃ + μ₃)`, giving
/// `(λ₁−λ₃, λ₂−λ₃, μ₁−μ₃, μ₂−μ₃, ν₁−λ₃−μ₃, ν₂−λ₃−μ₃)`. The coefficient is
/// preserved only for balanced triples, since `ν₃` is dropped.
pub fn reduce_to_sl3(t: &Gl3Triple) -> LrPoint {
    let (l3, m3) = (t.lam[2], t.mu[2]);
    LrPoint([
        t.lam[0] - l3,
        t.lam[1] - l3,
        t.mu[0] - m3,
        t.mu[1] - m3,
        t.nu[0] - l3 - m3,
        t.nu[1] - l3 - m3,
    ])
}

/// Moves `m = λ₃ − μ₃` full columns from `λ` to `μ`; the third parts of `λ`
/// and `μ` trade places and the map is an involution.
pub fn gl3_extra_generator(t: &Gl3Triple) -> Gl3Triple {
    let m = t.lam[2] - t.mu[2];
    Gl3Triple {
        lam: t.lam.map(|x| x - m),
        mu: t.mu.map(|x| x + m),
        nu: t.nu,
    }
}

/// All triples of partitions with at most three parts, each part ≤ `bound`.
pub fn gl3_triples_up_to(bound: i64) -> Vec<Gl3Triple> {
    let parts: Vec<[i64; 3]> = (0..=bound)
        .flat_map(|a| (0..=a).flat_map(move |b| (0..=b).map(move |c| [a, b, c])))
        .collect();
    let mut out = Vec::with_capacity(parts.len().pow(3));
    for &lam in &parts {
        for &mu in &parts {
            for &nu in &parts {
                out.push(Gl3Triple { lam, mu, nu });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gl3Mismatch {
    pub triple: Gl3Triple,
    pub image: Gl3Triple,
    pub coefficient: u64,
    pub image_coefficient: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gl3Report {
    pub bound: u32,
    pub triples_checked: u64,
    /// Triples with a nonzero coefficient.
    pub nonzero: u64,
    pub mismatches: Vec<Gl3Mismatch>,
}

impl Gl3Report {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn check(&self) -> Result<&Self> {
        match self.mismatches.first() {
            None => Ok(self),
            Some(m) => Err(Error::ValidationFailure {
                input: m.triple.to_string(),
                expected: m.coefficient as i64,
                found: m.image_coefficient as i64,
            }),
        }
    }
}

/// Compares each triple's coefficient with that of its image under the
/// extra generator.
pub fn check_gl3_generator(bound: u32) -> Gl3Report {
    let triples = gl3_triples_up_to(i64::from(bound));
    let results: Vec<(u64, Option<Gl3Mismatch>)> = triples
        .par_iter()
        .map(|t| {
            let image = gl3_extra_generator(t);
            let (c, ci) = (t.coefficient(), image.coefficient());
            let mismatch = (c != ci).then_some(Gl3Mismatch {
                triple: *t,
                image,
                coefficient: c,
                image_coefficient: ci,
            });
            (c, mismatch)
        })
        .collect();
    Gl3Report {
        bound,
        triples_checked: triples.len() as u64,
        nonzero: results.iter().filter(|(c, _)| *c > 0).count() as u64,
        mismatches: results.into_iter().filter_map(|(_, m)| m).collect(),
    }
}
