//! The twelve classical symmetries stated on partition triples: the S₃
//! action by complements in a `3 × ν₁` rectangle, and the duality with
//! complements in rectangles of widths `λ₁`, `μ₁`, `λ₁ + μ₁`.

use serde::Serialize;

use crate::chamber::LrPoint;
use crate::error::Result;
use crate::lift::LinearSymmetry;
use crate::lr_oracle;

/// `(λ, μ, ν)` with `λ`, `μ` of at most two parts and `ν` of at most three,
/// kept as raw integers so that maps may leave the partition region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Sl3Triple {
    pub lam: [i64; 2],
    pub mu: [i64; 2],
    pub nu: [i64; 3],
}

impl Sl3Triple {
    pub fn from_point(p: LrPoint) -> Self {
        Sl3Triple {
            lam: p.lam(),
            mu: p.mu(),
            nu: p.nu(),
        }
    }

    /// Drops `ν₃`; exact only for weight-balanced triples.
    pub fn to_point(&self) -> LrPoint {
        LrPoint([
            self.lam[0],
            self.lam[1],
            self.mu[0],
            self.mu[1],
            self.nu[0],
            self.nu[1],
        ])
    }

    pub fn is_balanced(&self) -> bool {
        self.lam.iter().sum::<i64>() + self.mu.iter().sum::<i64>() == self.nu.iter().sum::<i64>()
    }

    /// LR coefficient, zero if any component is not a partition.
    pub fn coefficient(&self) -> u64 {
        lr_oracle::lr_coefficient_signed(&self.lam, &self.mu, &self.nu)
    }
}

fn pad(p: [i64; 2]) -> [i64; 3] {
    [p[0], p[1], 0]
}

/// Complement in a rectangle of height 3 and the given width.
fn complement(p: [i64; 3], width: i64) -> [i64; 3] {
    [width - p[2], width - p[1], width - p[0]]
}

/// Narrows a three-part complement into a two-part slot; the last part is
/// identically zero for every complement placed there.
fn narrow(p: [i64; 3]) -> [i64; 2] {
    debug_assert_eq!(p[2], 0);
    [p[0], p[1]]
}

/// The six members of the S₃ orbit, in the order
/// `(λ,μ,ν), (μ,λ,ν), (μ,ν□,λ□), (ν□,μ,λ□), (ν□,λ,μ□), (λ,ν□,μ□)`.
pub fn s3_images(t: &Sl3Triple) -> [Sl3Triple; 6] {
    let w = t.nu[0];
    let lam_c = complement(pad(t.lam), w);
    let mu_c = complement(pad(t.mu), w);
    let nu_c = narrow(complement(t.nu, w));
    let triple = |lam, mu, nu| Sl3Triple { lam, mu, nu };
    [
        *t,
        triple(t.mu, t.lam, t.nu),
        triple(t.mu, nu_c, lam_c),
        triple(nu_c, t.mu, lam_c),
        triple(nu_c, t.lam, mu_c),
        triple(t.lam, nu_c, mu_c),
    ]
}

/// `(λ□, μ□, ν□)` with widths `λ₁`, `μ₁` and `λ₁ + μ₁`.
pub fn duality_image(t: &Sl3Triple) -> Sl3Triple {
    Sl3Triple {
        lam: narrow(complement(pad(t.lam), t.lam[0])),
        mu: narrow(complement(pad(t.mu), t.mu[0])),
        nu: complement(t.nu, t.lam[0] + t.mu[0]),
    }
}

/// The seven classical identities as maps of `Z⁶`: the six S₃ members
/// followed by the duality.
pub fn classical_maps() -> Result<Vec<(&'static str, LinearSymmetry)>> {
    const NAMES: [&str; 6] = [
        "(l,m,n)",
        "(m,l,n)",
        "(m,n*,l*)",
        "(n*,m,l*)",
        "(n*,l,m*)",
        "(l,n*,m*)",
    ];
    let mut out = Vec::with_capacity(7);
    for (k, name) in NAMES.into_iter().enumerate() {
        let map = LinearSymmetry::from_coordinate_map(|p| {
            s3_images(&Sl3Triple::from_point(p))[k].to_point()
        })?;
        out.push((name, map));
    }
    out.push((
        "(l*,m*,n*)",
        LinearSymmetry::from_coordinate_map(|p| {
            duality_image(&Sl3Triple::from_point(p)).to_point()
        })?,
    ));
    Ok(out)
}

/// Every triple with `λ`, `μ` of at most two parts, `ν` of at most three,
/// all parts at most `bound`.
pub fn triples_up_to(bound: i64) -> Vec<Sl3Triple> {
    let two: Vec<[i64; 2]> = (0..=bound)
        .flat_map(|a| (0..=a).map(move |b| [a, b]))
        .collect();
    let three: Vec<[i64; 3]> = (0..=bound)
        .flat_map(|a| (0..=a).flat_map(move |b| (0..=b).map(move |c| [a, b, c])))
        .collect();
    let mut out = Vec::with_capacity(two.len() * two.len() * three.len());
    for &lam in &two {
        for &mu in &two {
            for &nu in &three {
                out.push(Sl3Triple { lam, mu, nu });
            }
        }
    }
    out
}
