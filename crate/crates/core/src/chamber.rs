//! The chamber complex of the SL₃ Littlewood–Richardson function `C` and its
//! piecewise evaluation.
//!
//! `C` lives on `Z⁶` with coordinates `(λ₁, λ₂, μ₁, μ₂, ν₁, ν₂)`; `ν₃` is the
//! dependent quantity fixed by weight balance. The complex has nine rays and
//! eighteen simplicial chambers, each carrying an affine formula for `C`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num::{Integer, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{self, Rational, RationalMatrix};
use crate::lr_oracle;

/// A point `(λ₁, λ₂, μ₁, μ₂, ν₁, ν₂)` of `Z⁶`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct LrPoint(pub [i64; 6]);

impl LrPoint {
    pub const ORIGIN: LrPoint = LrPoint([0; 6]);

    pub fn new(lam1: i64, lam2: i64, mu1: i64, mu2: i64, nu1: i64, nu2: i64) -> Self {
        LrPoint([lam1, lam2, mu1, mu2, nu1, nu2])
    }

    pub fn coords(&self) -> [i64; 6] {
        self.0
    }

    /// `ν₃ = λ₁ + λ₂ + μ₁ + μ₂ − ν₁ − ν₂`.
    pub fn nu3(&self) -> i64 {
        nu3(*self)
    }

    pub fn lam(&self) -> [i64; 2] {
        [self.0[0], self.0[1]]
    }

    pub fn mu(&self) -> [i64; 2] {
        [self.0[2], self.0[3]]
    }

    pub fn nu(&self) -> [i64; 3] {
        [self.0[4], self.0[5], self.nu3()]
    }

    /// Whether `λ`, `μ` and `ν` (with the derived `ν₃`) are all partitions.
    pub fn is_partition_triple(&self) -> bool {
        let [l1, l2] = self.lam();
        let [m1, m2] = self.mu();
        let [n1, n2, n3] = self.nu();
        l1 >= l2 && l2 >= 0 && m1 >= m2 && m2 >= 0 && n1 >= n2 && n2 >= n3 && n3 >= 0
    }

    pub fn scale(&self, k: i64) -> LrPoint {
        LrPoint(self.0.map(|x| x * k))
    }
}

impl std::ops::Add for LrPoint {
    type Output = LrPoint;

    fn add(self, rhs: LrPoint) -> LrPoint {
        LrPoint(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl fmt::Display for LrPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [l1, l2, m1, m2, n1, n2] = self.0;
        write!(f, "({l1},{l2},{m1},{m2},{n1},{n2})")
    }
}

pub fn nu3(p: LrPoint) -> i64 {
    let [l1, l2, m1, m2, n1, n2] = p.0;
    l1 + l2 + m1 + m2 - n1 - n2
}

/// `C(p)` computed by the tableau oracle rather than the chamber formulas.
pub fn oracle_value(p: LrPoint) -> u64 {
    lr_oracle::lr_coefficient_signed(&p.lam(), &p.mu(), &p.nu())
}

/// `constant + coeffs · p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineForm {
    pub constant: i64,
    pub coeffs: [i64; 6],
}

impl AffineForm {
    pub fn eval(&self, p: LrPoint) -> i64 {
        self.constant + linear(&self.coeffs, &p.0)
    }

    /// The form `p ↦ self(m · p)`.
    pub fn compose(&self, m: &[[i64; 6]; 6]) -> AffineForm {
        AffineForm {
            constant: self.constant,
            coeffs: std::array::from_fn(|j| (0..6).map(|i| self.coeffs[i] * m[i][j]).sum()),
        }
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["l1", "l2", "m1", "m2", "n1", "n2"];
        write!(f, "{}", self.constant)?;
        for (c, name) in self.coeffs.iter().zip(NAMES) {
            match c {
                0 => {}
                1 => write!(f, " + {name}")?,
                -1 => write!(f, " - {name}")?,
                c if *c > 0 => write!(f, " + {c}*{name}")?,
                c => write!(f, " - {}*{name}", -c)?,
            }
        }
        Ok(())
    }
}

fn linear(a: &[i64; 6], p: &[i64; 6]) -> i64 {
    a.iter().zip(p).map(|(x, y)| x * y).sum()
}

/// Ray labels in the canonical scan order `b, c, f, d₁, e₁, g₁, d₂, e₂, g₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ray {
    B,
    C,
    F,
    D1,
    E1,
    G1,
    D2,
    E2,
    G2,
}

impl Ray {
    pub const ALL: [Ray; 9] = [
        Ray::B,
        Ray::C,
        Ray::F,
        Ray::D1,
        Ray::E1,
        Ray::G1,
        Ray::D2,
        Ray::E2,
        Ray::G2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Ray {
        Ray::ALL[i]
    }

    pub fn label(self) -> &'static str {
        match self {
            Ray::B => "b",
            Ray::C => "c",
            Ray::F => "f",
            Ray::D1 => "d1",
            Ray::E1 => "e1",
            Ray::G1 => "g1",
            Ray::D2 => "d2",
            Ray::E2 => "e2",
            Ray::G2 => "g2",
        }
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Ray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ray> {
        Ray::ALL
            .into_iter()
            .find(|r| r.label() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown ray label {s:?}")))
    }
}

/// A set of ray labels as a bitmask over `Ray::index`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RaySet(u16);

impl RaySet {
    pub fn insert(&mut self, r: Ray) {
        self.0 |= 1 << r.index();
    }

    pub fn contains(&self, r: Ray) -> bool {
        self.0 & (1 << r.index()) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Ray> + '_ {
        Ray::ALL.into_iter().filter(|r| self.contains(*r))
    }

    pub fn intersection(&self, other: &RaySet) -> RaySet {
        RaySet(self.0 & other.0)
    }

    fn count_of(&self, group: &[Ray]) -> usize {
        group.iter().filter(|r| self.contains(**r)).count()
    }
}

impl FromIterator<Ray> for RaySet {
    fn from_iter<I: IntoIterator<Item = Ray>>(iter: I) -> Self {
        let mut s = RaySet::default();
        for r in iter {
            s.insert(r);
        }
        s
    }
}

impl fmt::Debug for RaySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Chamber label `κ₁ … κ₁₈`, stored 0-based and written `k1 … k18`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChamberId(pub u8);

impl ChamberId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ChamberId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k{}", self.0 + 1)
    }
}

impl FromStr for ChamberId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ChamberId> {
        let n: u8 = s
            .trim()
            .strip_prefix('k')
            .and_then(|n| n.parse().ok())
            .filter(|n| (1..=NUM_CHAMBERS as u8).contains(n))
            .ok_or_else(|| Error::Parse(format!("bad chamber id {s:?}")))?;
        Ok(ChamberId(n - 1))
    }
}

impl Serialize for ChamberId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ChamberId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub const NUM_CHAMBERS: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub id: ChamberId,
    pub rays: RaySet,
    pub formula: AffineForm,
}

/// Integer inequalities cutting out a closed simplicial cone: `p` is inside
/// iff every row of `facets · p` is nonnegative. Each row is a positive
/// multiple of a row of the inverse ray matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ConeTest {
    facets: [[i64; 6]; 6],
}

impl ConeTest {
    fn from_rays(vectors: &[[i64; 6]]) -> Result<ConeTest> {
        let basis = RationalMatrix::from_integer_columns(vectors)?;
        let inv = exactmath::inverse(&basis)?;
        let mut facets = [[0i64; 6]; 6];
        for (i, out) in facets.iter_mut().enumerate() {
            let row = inv.row(i);
            let lcm = row
                .iter()
                .fold(num::BigInt::from(1), |acc, q| acc.lcm(q.denom()));
            for (o, q) in out.iter_mut().zip(row) {
                let scaled = q * Rational::from_integer(lcm.clone());
                *o = exactmath::to_integer(&scaled)
                    .ok_or_else(|| Error::DataCorrupt("cone inequality overflows i64".into()))?;
            }
        }
        Ok(ConeTest { facets })
    }

    fn contains(&self, p: &LrPoint) -> bool {
        self.facets.iter().all(|row| linear(row, &p.0) >= 0)
    }
}

#[derive(Clone, Debug)]
pub struct ChamberComplex {
    rays: [[i64; 6]; 9],
    chambers: Vec<Chamber>,
    cones: Vec<ConeTest>,
}

/// The nine minimal ray generators, indexed by `Ray::index`.
pub const RAY_TABLE: [[i64; 6]; 9] = [
    [2, 1, 2, 1, 3, 2], // b
    [1, 1, 1, 1, 2, 1], // c
    [1, 0, 1, 0, 1, 1], // f
    [1, 1, 1, 0, 1, 1], // d1
    [1, 1, 0, 0, 1, 1], // e1
    [1, 0, 0, 0, 1, 0], // g1
    [1, 0, 1, 1, 1, 1], // d2
    [0, 0, 1, 1, 1, 1], // e2
    [0, 0, 1, 0, 1, 0], // g2
];

/// A chamber formula in the nine GL₃ variables, as tabulated:
/// `constant + λ·(λ₁,λ₂,λ₃) + μ·(μ₁,μ₂,μ₃) + ν·(ν₁,ν₂,ν₃)`.
#[derive(Clone, Copy, Debug)]
pub struct TableFormula {
    pub constant: i64,
    pub lam: [i64; 3],
    pub mu: [i64; 3],
    pub nu: [i64; 3],
}

impl TableFormula {
    /// Restricts to `λ₃ = μ₃ = 0` and eliminates `ν₃` by weight balance.
    pub fn reduce(&self) -> AffineForm {
        let n3 = self.nu[2];
        AffineForm {
            constant: self.constant,
            coeffs: [
                self.lam[0] + n3,
                self.lam[1] + n3,
                self.mu[0] + n3,
                self.mu[1] + n3,
                self.nu[0] - n3,
                self.nu[1] - n3,
            ],
        }
    }
}

const fn tf(lam: [i64; 3], mu: [i64; 3], nu: [i64; 3]) -> TableFormula {
    TableFormula {
        constant: 1,
        lam,
        mu,
        nu,
    }
}

use Ray::{B, C, D1, D2, E1, E2, F, G1, G2};

/// Chamber generators and formulas, κ₁ to κ₁₈. The κ₁₃ and κ₁₄ formulas use
/// `ν₁` (the corrected reading of the source table).
pub const CHAMBER_TABLE: [([Ray; 6], TableFormula); NUM_CHAMBERS] = [
    (
        [B, C, D1, E2, D2, E1],
        tf([0, -1, 0], [0, -1, 0], [1, 0, 0]),
    ),
    ([B, C, D1, G1, D2, G2], tf([0, 0, 0], [0, 0, 0], [0, 1, -1])),
    ([B, C, E2, G1, E1, G2], tf([1, 0, 0], [1, 0, 0], [-1, 0, 0])),
    ([B, F, D1, E2, D2, E1], tf([0, 0, 0], [0, 0, 0], [1, -1, 0])),
    ([B, F, D1, G1, D2, G2], tf([0, 1, 0], [0, 1, 0], [0, 0, -1])),
    (
        [B, F, E2, G1, E1, G2],
        tf([0, 0, -1], [0, 0, -1], [0, 0, 1]),
    ),
    ([B, C, D1, G1, D2, E1], tf([0, 0, 1], [1, 0, 0], [0, 0, -1])),
    ([B, C, D1, E2, D2, G2], tf([1, 0, 0], [0, 0, 1], [0, 0, -1])),
    ([B, C, D1, E2, E1, G2], tf([1, -1, 0], [0, 0, 0], [0, 0, 0])),
    ([B, C, E2, G1, D2, E1], tf([0, 0, 0], [1, -1, 0], [0, 0, 0])),
    (
        [B, C, D1, G1, E1, G2],
        tf([0, -1, 0], [0, 0, -1], [0, 1, 0]),
    ),
    (
        [B, C, E2, G1, D2, G2],
        tf([0, 0, -1], [0, -1, 0], [0, 1, 0]),
    ),
    (
        [B, F, D1, G1, D2, E1],
        tf([-1, 0, 0], [0, 0, -1], [1, 0, 0]),
    ),
    (
        [B, F, D1, E2, D2, G2],
        tf([0, 0, -1], [-1, 0, 0], [1, 0, 0]),
    ),
    ([B, F, D1, G1, E1, G2], tf([0, 0, 0], [0, 1, -1], [0, 0, 0])),
    ([B, F, E2, G1, D2, G2], tf([0, 1, -1], [0, 0, 0], [0, 0, 0])),
    ([B, F, D1, E2, E1, G2], tf([1, 0, 0], [0, 1, 0], [0, -1, 0])),
    ([B, F, E2, G1, D2, E1], tf([0, 1, 0], [1, 0, 0], [0, -1, 0])),
];

const CF: [Ray; 2] = [C, F];
pub const BLOCK_ONE: [Ray; 3] = [D1, E2, G1];
pub const BLOCK_TWO: [Ray; 3] = [D2, E1, G2];

/// JSON form of the complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub rays: BTreeMap<Ray, [i64; 6]>,
    pub chambers: Vec<ChamberRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChamberRecord {
    pub id: ChamberId,
    pub rays: Vec<Ray>,
    pub formula: AffineForm,
}

pub fn load_complex() -> Result<ChamberComplex> {
    ChamberComplex::from_file(ChamberComplex::embedded_file())
}

impl ChamberComplex {
    /// The embedded complex, validated once per process.
    pub fn standard() -> &'static ChamberComplex {
        static COMPLEX: OnceLock<ChamberComplex> = OnceLock::new();
        COMPLEX.get_or_init(|| load_complex().expect("embedded chamber data is valid"))
    }

    pub fn embedded_file() -> ComplexFile {
        ComplexFile {
            rays: Ray::ALL
                .into_iter()
                .map(|r| (r, RAY_TABLE[r.index()]))
                .collect(),
            chambers: CHAMBER_TABLE
                .iter()
                .enumerate()
                .map(|(i, (rays, formula))| ChamberRecord {
                    id: ChamberId(i as u8),
                    rays: rays.to_vec(),
                    formula: formula.reduce(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &str) -> Result<ChamberComplex> {
        let file: ComplexFile =
            serde_json::from_str(json).map_err(|e| Error::DataCorrupt(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            rays: Ray::ALL
                .into_iter()
                .map(|r| (r, self.rays[r.index()]))
                .collect(),
            chambers: self
                .chambers
                .iter()
                .map(|c| ChamberRecord {
                    id: c.id,
                    rays: c.rays.iter().collect(),
                    formula: c.formula,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("complex serializes")
    }

    /// Validates `file` and builds the complex.
    pub fn from_file(file: ComplexFile) -> Result<ChamberComplex> {
        let corrupt = |msg: String| Err(Error::DataCorrupt(msg));

        if file.rays.len() != Ray::ALL.len() {
            return corrupt(format!("expected 9 rays, found {}", file.rays.len()));
        }
        let mut rays = [[0i64; 6]; 9];
        for (ray, v) in &file.rays {
            if *v != RAY_TABLE[ray.index()] {
                return corrupt(format!(
                    "ray {ray} is {v:?}, expected {:?}",
                    RAY_TABLE[ray.index()]
                ));
            }
            rays[ray.index()] = *v;
        }

        if file.chambers.len() != NUM_CHAMBERS {
            return corrupt(format!(
                "expected 18 chambers, found {}",
                file.chambers.len()
            ));
        }
        let mut slots: Vec<Option<Chamber>> = vec![None; NUM_CHAMBERS];
        for rec in file.chambers {
            let set: RaySet = rec.rays.iter().copied().collect();
            if rec.rays.len() != 6 || set.len() != 6 {
                return corrupt(format!("chamber {} needs 6 distinct rays", rec.id));
            }
            if set.count_of(&[B]) != 1
                || set.count_of(&CF) != 1
                || set.count_of(&BLOCK_ONE) != 2
                || set.count_of(&BLOCK_TWO) != 2
            {
                return corrupt(format!(
                    "chamber {} rays {set:?} are not b, one of c/f, two per block",
                    rec.id
                ));
            }
            let slot = &mut slots[rec.id.index()];
            if slot.is_some() {
                return corrupt(format!("duplicate chamber {}", rec.id));
            }
            *slot = Some(Chamber {
                id: rec.id,
                rays: set,
                formula: rec.formula,
            });
        }
        let chambers: Vec<Chamber> = slots
            .into_iter()
            .map(|c| c.expect("18 distinct ids"))
            .collect();

        let distinct: BTreeSet<RaySet> = chambers.iter().map(|c| c.rays).collect();
        if distinct.len() != NUM_CHAMBERS {
            return corrupt("two chambers share a generator set".into());
        }

        let mut cones = Vec::with_capacity(NUM_CHAMBERS);
        for ch in &chambers {
            let vectors: Vec<[i64; 6]> = ch.rays.iter().map(|r| rays[r.index()]).collect();
            match ConeTest::from_rays(&vectors) {
                Ok(cone) => cones.push(cone),
                Err(Error::SingularMatrix) => {
                    return corrupt(format!("chamber {} is not simplicial", ch.id))
                }
                Err(e) => return Err(e),
            }
        }

        let b = LrPoint(rays[B.index()]);
        for ch in &chambers {
            let v = ch.formula.eval(b);
            if v != 2 {
                return corrupt(format!("formula of {} gives {v} at b, expected 2", ch.id));
            }
        }

        // Two affine forms agree on a common face iff their constants agree
        // and their linear parts agree on every shared ray.
        for (i, a) in chambers.iter().enumerate() {
            for bch in &chambers[i + 1..] {
                let shared = a.rays.intersection(&bch.rays);
                let agree = a.formula.constant == bch.formula.constant
                    && shared.iter().all(|r| {
                        linear(&a.formula.coeffs, &rays[r.index()])
                            == linear(&bch.formula.coeffs, &rays[r.index()])
                    });
                if !agree {
                    return corrupt(format!(
                        "formulas of {} and {} disagree on their common face",
                        a.id, bch.id
                    ));
                }
            }
        }

        Ok(ChamberComplex {
            rays,
            chambers,
            cones,
        })
    }

    pub fn ray(&self, r: Ray) -> [i64; 6] {
        self.rays[r.index()]
    }

    pub fn ray_vectors(&self) -> &[[i64; 6]; 9] {
        &self.rays
    }

    pub fn ray_at(&self, v: &[i64; 6]) -> Option<Ray> {
        Ray::ALL.into_iter().find(|r| self.rays[r.index()] == *v)
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn chamber(&self, id: ChamberId) -> &Chamber {
        &self.chambers[id.index()]
    }

    pub fn chamber_with_rays(&self, rays: RaySet) -> Option<ChamberId> {
        self.chambers.iter().find(|c| c.rays == rays).map(|c| c.id)
    }

    /// Exact coordinates of `p` over the generators of chamber `id`, in
    /// `Ray` order.
    pub fn conic_coordinates(&self, id: ChamberId, p: LrPoint) -> Result<Vec<Rational>> {
        let vectors: Vec<[i64; 6]> = self
            .chamber(id)
            .rays
            .iter()
            .map(|r| self.rays[r.index()])
            .collect();
        let basis = RationalMatrix::from_integer_columns(&vectors)?;
        let rhs: Vec<Rational> = p.0.iter().map(|&x| exactmath::rational(x)).collect();
        exactmath::solve_linear(&basis, &rhs)
    }

    /// Every chamber whose closed cone contains `p`.
    pub fn chambers_containing(&self, p: LrPoint) -> Vec<ChamberId> {
        self.chambers
            .iter()
            .zip(&self.cones)
            .filter(|(_, cone)| cone.contains(&p))
            .map(|(c, _)| c.id)
            .collect()
    }

    /// `C(p)`, or an error if two chambers containing `p` disagree.
    pub fn try_evaluate(&self, p: LrPoint) -> Result<u64> {
        let mut found: Option<(ChamberId, i64)> = None;
        for (ch, cone) in self.chambers.iter().zip(&self.cones) {
            if !cone.contains(&p) {
                continue;
            }
            let v = ch.formula.eval(p);
            match found {
                None => found = Some((ch.id, v)),
                Some((first, fv)) if fv != v => {
                    return Err(Error::InconsistentFormulas {
                        point: p,
                        first: first.to_string(),
                        first_value: fv,
                        second: ch.id.to_string(),
                        second_value: v,
                    })
                }
                Some(_) => {}
            }
        }
        match found {
            None => Ok(0),
            Some((id, v)) => u64::try_from(v).map_err(|_| {
                Error::DataCorrupt(format!("formula of {id} is negative ({v}) at {p}"))
            }),
        }
    }

    /// `C(p)`.
    ///
    /// # Panics
    /// If the chamber formulas are inconsistent at `p`, which validated data
    /// rules out.
    pub fn evaluate(&self, p: LrPoint) -> u64 {
        self.try_evaluate(p).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Compares `evaluate` with the tableau oracle on every point of
    /// `[0, bound]⁶`.
    pub fn cross_validate(&self, bound: u32) -> CrossValidationReport {
        let side = i64::from(bound) + 1;
        let total = side.pow(6);
        let mismatches: Vec<Mismatch> = (0..total)
            .into_par_iter()
            .filter_map(|mut code| {
                let mut coords = [0i64; 6];
                for c in coords.iter_mut().rev() {
                    *c = code % side;
                    code /= side;
                }
                let p = LrPoint(coords);
                let oracle = oracle_value(p);
                let chamber = self.try_evaluate(p);
                match chamber {
                    Ok(v) if v == oracle => None,
                    Ok(v) => Some(Mismatch {
                        point: p,
                        chamber: Some(v),
                        oracle,
                    }),
                    Err(_) => Some(Mismatch {
                        point: p,
                        chamber: None,
                        oracle,
                    }),
                }
            })
            .collect();
        CrossValidationReport {
            bound,
            points_checked: total as u64,
            mismatches,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub point: LrPoint,
    /// `None` when the chamber formulas were themselves inconsistent.
    pub chamber: Option<u64>,
    pub oracle: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossValidationReport {
    pub bound: u32,
    pub points_checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl CrossValidationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn check(&self) -> Result<&Self> {
        match self.mismatches.first() {
            None => Ok(self),
            Some(m) => Err(Error::ValidationFailure {
                input: m.point.to_string(),
                expected: m.oracle as i64,
                found: m.chamber.map_or(-1, |v| v as i64),
            }),
        }
    }
}

/// Whether an exact coordinate vector describes a point of the closed cone.
pub fn is_conic(coords: &[Rational]) -> bool {
    coords.iter().all(|q| !q.is_negative())
}

/// Whether an exact coordinate vector describes a point of the open cone.
pub fn is_interior(coords: &[Rational]) -> bool {
    coords.iter().all(|q| !q.is_negative() && !q.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn complex() -> &'static ChamberComplex {
        ChamberComplex::standard()
    }

    fn id(n: u8) -> ChamberId {
        ChamberId(n - 1)
    }

    #[test]
    fn nu3_values() {
        assert_eq!(nu3(LrPoint::new(2, 1, 2, 1, 3, 2)), 1);
        assert_eq!(nu3(LrPoint::ORIGIN), 0);
        assert_eq!(nu3(LrPoint::new(1, 1, 1, 1, 2, 1)), 1);
    }

    #[test]
    fn table_data() {
        let cx = complex();
        assert_eq!(cx.ray(Ray::B), [2, 1, 2, 1, 3, 2]);
        let k2 = cx.chamber(id(2));
        // 1 + ν₂ − ν₃ at ν₂ = 2, ν₃ = 1
        assert_eq!(k2.formula.eval(LrPoint::new(2, 1, 2, 1, 3, 2)), 2);
        for ch in cx.chambers() {
            assert_eq!(ch.rays.len(), 6);
            assert!(ch.rays.contains(Ray::B));
            assert_eq!(ch.rays.count_of(&CF), 1);
            assert_eq!(ch.rays.count_of(&BLOCK_ONE), 2);
            assert_eq!(ch.rays.count_of(&BLOCK_TWO), 2);
        }
    }

    #[test]
    fn reduced_formulas() {
        let cx = complex();
        // κ₆: 1 − λ₃ − μ₃ + ν₃ becomes 1 + λ₁ + λ₂ + μ₁ + μ₂ − ν₁ − ν₂
        assert_eq!(
            cx.chamber(id(6)).formula,
            AffineForm {
                constant: 1,
                coeffs: [1, 1, 1, 1, -1, -1]
            }
        );
        // κ₁: 1 − λ₂ − μ₂ + ν₁
        assert_eq!(
            cx.chamber(id(1)).formula,
            AffineForm {
                constant: 1,
                coeffs: [0, -1, 0, -1, 1, 0]
            }
        );
        // κ₁₃: 1 − λ₁ − μ₃ + ν₁
        assert_eq!(
            cx.chamber(id(13)).formula,
            AffineForm {
                constant: 1,
                coeffs: [-1, 0, 0, 0, 1, 0]
            }
        );
    }

    #[test]
    fn formulas_all_two_at_b() {
        let b = LrPoint(RAY_TABLE[0]);
        for ch in complex().chambers() {
            assert_eq!(ch.formula.eval(b), 2, "{}", ch.id);
        }
    }

    #[test]
    fn membership_examples() {
        let cx = complex();
        let b = LrPoint(cx.ray(Ray::B));
        assert_eq!(cx.chambers_containing(b).len(), 18);
        assert!(cx
            .chambers_containing(LrPoint::new(-1, 0, 0, 0, 0, 0))
            .is_empty());

        let r = |ray| LrPoint(cx.ray(ray));
        let p = r(D1).scale(2) + r(G2).scale(3) + r(B) + r(C) + r(E2) + r(E1);
        let inside = cx.chambers_containing(p);
        assert!(inside.contains(&id(9)));
        // strictly interior, so no other chamber
        assert_eq!(inside, vec![id(9)]);
    }

    #[test]
    fn evaluation_examples() {
        let cx = complex();
        assert_eq!(cx.evaluate(LrPoint::new(2, 1, 2, 1, 3, 2)), 2);
        assert_eq!(cx.evaluate(LrPoint::ORIGIN), 1);
        assert_eq!(cx.evaluate(LrPoint::new(2, 0, 0, 0, 1, 1)), 0);
        assert!(cx
            .chambers_containing(LrPoint::new(2, 0, 0, 0, 1, 1))
            .is_empty());
        assert_eq!(cx.evaluate(LrPoint::new(1, 1, 1, 1, 2, 1)), 1);
        assert_eq!(
            cx.chamber(id(1))
                .formula
                .eval(LrPoint::new(1, 1, 1, 1, 2, 1)),
            1
        );
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_value(LrPoint::new(2, 1, 2, 1, 3, 2)), 2);
        assert_eq!(oracle_value(LrPoint::new(2, 0, 0, 0, 1, 1)), 0);
        assert_eq!(oracle_value(LrPoint::new(1, 1, 1, 1, 2, 1)), 1);
    }

    #[test]
    fn zero_outside_partition_region() {
        let cx = complex();
        let bad = [
            LrPoint::new(1, 2, 0, 0, 2, 1),
            LrPoint::new(0, -1, 0, 0, 0, -1),
            LrPoint::new(0, 0, 1, 2, 2, 1),
            LrPoint::new(0, 0, 0, -1, 0, -1),
            LrPoint::new(1, 0, 0, 0, 0, 1),
            LrPoint::new(1, 1, 1, 1, 1, 1),
            LrPoint::new(0, 0, 0, 0, 1, 0),
        ];
        for p in bad {
            assert!(!p.is_partition_triple(), "{p}");
            assert_eq!(cx.evaluate(p), 0, "{p}");
        }
    }

    #[test]
    fn cross_validate_small() {
        let cx = complex();
        let r = cx.cross_validate(0);
        assert_eq!((r.points_checked, r.mismatches.len()), (1, 0));
        let r = cx.cross_validate(4);
        assert_eq!(r.points_checked, 15625);
        assert!(r.check().is_ok(), "{:?}", r.mismatches.first());
    }

    #[test]
    fn json_round_trip() {
        let cx = complex();
        let json = cx.to_json();
        let back = ChamberComplex::from_json(&json).unwrap();
        assert_eq!(back.to_file(), cx.to_file());
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["rays"]["b"], serde_json::json!([2, 1, 2, 1, 3, 2]));
        assert_eq!(value["chambers"][0]["id"], "k1");
        assert_eq!(
            value["chambers"][0]["rays"],
            serde_json::json!(["b", "c", "d1", "e1", "d2", "e2"])
        );
        assert_eq!(value["chambers"][0]["formula"]["constant"], 1);
    }

    fn corrupted(edit: impl FnOnce(&mut ComplexFile)) -> Result<ChamberComplex> {
        let mut file = ChamberComplex::embedded_file();
        edit(&mut file);
        ChamberComplex::from_file(file)
    }

    fn assert_corrupt(r: Result<ChamberComplex>) {
        assert!(matches!(r, Err(Error::DataCorrupt(_))), "{r:?}");
    }

    #[test]
    fn corrupt_data_is_rejected() {
        assert_corrupt(corrupted(|f| {
            f.rays.insert(Ray::C, [1, 1, 1, 1, 2, 2]);
        }));
        assert_corrupt(corrupted(|f| {
            f.rays.remove(&Ray::G2);
        }));
        assert_corrupt(corrupted(|f| {
            f.chambers.pop();
        }));
        assert_corrupt(corrupted(|f| f.chambers[3].id = ChamberId(0)));
        // f and c together violates the decomposition
        assert_corrupt(corrupted(|f| {
            f.chambers[0].rays = vec![B, C, F, D1, E2, D2]
        }));
        assert_corrupt(corrupted(|f| {
            f.chambers[0].rays = vec![B, C, D1, E2, D2, D2]
        }));
        assert_corrupt(corrupted(|f| {
            f.chambers[1].rays = f.chambers[0].rays.clone()
        }));
        assert_corrupt(corrupted(|f| f.chambers[4].formula.constant = 2));
        assert_corrupt(ChamberComplex::from_json(
            "{\"rays\": {\"z\": [0,0,0,0,0,0]}, \"chambers\": []}",
        ));
        assert_corrupt(ChamberComplex::from_json("not json"));
    }

    #[test]
    fn nu3_in_place_of_nu1_is_rejected() {
        // Reading ν₃ instead of ν₁ in κ₁₃ breaks consistency with its neighbours.
        let wrong = tf([-1, 0, 0], [0, 0, -1], [0, 0, 1]).reduce();
        assert_corrupt(corrupted(|f| f.chambers[12].formula = wrong));
        let wrong = tf([0, 0, -1], [-1, 0, 0], [0, 0, 1]).reduce();
        assert_corrupt(corrupted(|f| f.chambers[13].formula = wrong));
    }

    #[test]
    fn inconsistent_formulas_surface_at_evaluation() {
        let mut cx = complex().clone();
        cx.chambers[1].formula.coeffs[5] += 1;
        let b = LrPoint(RAY_TABLE[0]);
        assert!(matches!(
            cx.try_evaluate(b),
            Err(Error::InconsistentFormulas { .. })
        ));
    }

    #[test]
    fn chamber_id_parsing() {
        assert_eq!("k1".parse::<ChamberId>().unwrap(), ChamberId(0));
        assert_eq!("k18".parse::<ChamberId>().unwrap(), ChamberId(17));
        assert!("k19".parse::<ChamberId>().is_err());
        assert!("k0".parse::<ChamberId>().is_err());
        assert_eq!(ChamberId(8).to_string(), "k9");
    }

    fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(0i64..=3, n)
    }

    proptest! {
        #[test]
        fn membership_matches_exact_solve(p in prop::array::uniform6(-3i64..=8)) {
            let cx = complex();
            let p = LrPoint(p);
            let fast = cx.chambers_containing(p);
            let exact: Vec<ChamberId> = cx
                .chambers()
                .iter()
                .filter(|c| is_conic(&cx.conic_coordinates(c.id, p).unwrap()))
                .map(|c| c.id)
                .collect();
            prop_assert_eq!(fast, exact);
        }

        #[test]
        fn formulas_agree_on_shared_faces(k in 0usize..18, l in 0usize..18, w in coeffs(6)) {
            let cx = complex();
            let a = &cx.chambers()[k];
            let b = &cx.chambers()[l];
            let shared: Vec<Ray> = a.rays.intersection(&b.rays).iter().collect();
            let p = shared
                .iter()
                .zip(&w)
                .fold(LrPoint::ORIGIN, |acc, (r, &c)| acc + LrPoint(cx.ray(*r)).scale(c));
            prop_assert_eq!(a.formula.eval(p), b.formula.eval(p));
            prop_assert!(cx.chambers_containing(p).contains(&a.id));
            prop_assert!(cx.chambers_containing(p).contains(&b.id));
        }

        #[test]
        fn positive_on_support(k in 0usize..18, w in coeffs(6)) {
            let cx = complex();
            let ch = &cx.chambers()[k];
            let p = ch
                .rays
                .iter()
                .zip(&w)
                .fold(LrPoint::ORIGIN, |acc, (r, &c)| acc + LrPoint(cx.ray(r)).scale(c));
            prop_assert!(ch.formula.eval(p) >= 1);
            prop_assert!(cx.evaluate(p) >= 1);
            prop_assert_eq!(cx.evaluate(p), oracle_value(p));
        }
    }
}
