//! Unimodular maps of `Z⁶`, lifting of ray permutations, and certification
//! that a map is a symmetry of `C`.
//!
//! A map `F` is certified when it permutes the chambers (`g`) and every
//! chamber formula satisfies `P_{g(κ)} = P_κ ∘ F⁻¹` as affine forms. Since a
//! chamber-permuting unimodular map also maps the complement of the support
//! onto itself, this proves `C ∘ F = C` on all of `Z⁶`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chamber::{nu3, ChamberComplex, ChamberId, LrPoint, Ray, RaySet, NUM_CHAMBERS};
use crate::error::{Error, Result};
use crate::exactmath::{self, Rational, RationalMatrix};
use crate::ray_symmetry::{self, generators, orbit, GroupElement, PermGroup, RayPermutation};

pub type Matrix6 = [[i64; 6]; 6];

/// An integer 6×6 matrix acting on `LrPoint`s by `p ↦ M p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Matrix6", into = "Matrix6")]
pub struct LinearSymmetry {
    matrix: Matrix6,
}

impl LinearSymmetry {
    pub fn identity() -> Self {
        LinearSymmetry {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j))),
        }
    }

    pub fn new(matrix: Matrix6) -> Result<Self> {
        if !exactmath::is_unimodular(&matrix) {
            return Err(Error::NotUnimodular(format!(
                "determinant of {matrix:?} is not ±1"
            )));
        }
        Ok(LinearSymmetry { matrix })
    }

    /// Skips the unimodularity check. Only meant for exercising the
    /// rejection paths of the certifier.
    pub fn from_matrix_unchecked(matrix: Matrix6) -> Self {
        LinearSymmetry { matrix }
    }

    /// The matrix of a linear coordinate map, read off from the images of
    /// the unit vectors.
    pub fn from_coordinate_map(map: impl Fn(LrPoint) -> LrPoint) -> Result<Self> {
        let mut matrix = [[0i64; 6]; 6];
        for j in 0..6 {
            let mut e = [0i64; 6];
            e[j] = 1;
            let image = map(LrPoint(e));
            for (row, x) in matrix.iter_mut().zip(image.0) {
                row[j] = x;
            }
        }
        Self::new(matrix)
    }

    pub fn matrix(&self) -> &Matrix6 {
        &self.matrix
    }

    pub fn apply(&self, p: LrPoint) -> LrPoint {
        LrPoint(self.apply_vec(&p.0))
    }

    pub fn apply_vec(&self, v: &[i64; 6]) -> [i64; 6] {
        std::array::from_fn(|i| (0..6).map(|j| self.matrix[i][j] * v[j]).sum())
    }

    pub fn determinant(&self) -> Rational {
        RationalMatrix::from_integer_rows(&self.matrix)
            .and_then(|m| m.determinant())
            .expect("6x6 matrix")
    }

    pub fn is_unimodular(&self) -> bool {
        exactmath::is_unimodular(&self.matrix)
    }

    pub fn try_inverse(&self) -> Result<LinearSymmetry> {
        let m = RationalMatrix::from_integer_rows(&self.matrix)?;
        let inv = exactmath::inverse(&m)?;
        let rows = inv
            .to_integer_rows()
            .ok_or_else(|| Error::NotUnimodular("inverse is not integral".into()))?;
        Ok(LinearSymmetry {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| rows[i][j])),
        })
    }

    /// The permutation of the rays induced by this map, if it permutes them.
    pub fn ray_permutation(&self, complex: &ChamberComplex) -> Option<RayPermutation> {
        let images: Vec<Ray> = Ray::ALL
            .iter()
            .map(|r| complex.ray_at(&self.apply_vec(&complex.ray(*r))))
            .collect::<Option<_>>()?;
        RayPermutation::from_images(images.try_into().ok()?).ok()
    }

    fn multiply(a: &Matrix6, b: &Matrix6) -> Matrix6 {
        std::array::from_fn(|i| std::array::from_fn(|j| (0..6).map(|k| a[i][k] * b[k][j]).sum()))
    }
}

impl GroupElement for LinearSymmetry {
    /// `self` first, then `other`: the matrix `other · self`.
    fn then(&self, other: &Self) -> Self {
        LinearSymmetry {
            matrix: Self::multiply(&other.matrix, &self.matrix),
        }
    }

    fn inverse(&self) -> Self {
        self.try_inverse()
            .expect("unimodular map has an integral inverse")
    }
}

impl TryFrom<Matrix6> for LinearSymmetry {
    type Error = Error;

    fn try_from(m: Matrix6) -> Result<Self> {
        LinearSymmetry::new(m)
    }
}

impl From<LinearSymmetry> for Matrix6 {
    fn from(s: LinearSymmetry) -> Matrix6 {
        s.matrix
    }
}

impl fmt::Debug for LinearSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearSymmetry({:?})", self.matrix)
    }
}

impl fmt::Display for LinearSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            write!(f, "[{}]", cells.join(""))?;
        }
        Ok(())
    }
}

/// A permutation of the 18 chambers; serializes in one-line notation,
/// `images[i]` being the image of chamber `k{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChamberPermutation {
    images: Vec<ChamberId>,
}

impl ChamberPermutation {
    pub fn identity() -> Self {
        ChamberPermutation {
            images: (0..NUM_CHAMBERS as u8).map(ChamberId).collect(),
        }
    }

    pub fn apply(&self, c: ChamberId) -> ChamberId {
        self.images[c.index()]
    }

    pub fn images(&self) -> &[ChamberId] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn fixed_points(&self) -> Vec<ChamberId> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, c)| c.index() == *i)
            .map(|(_, c)| *c)
            .collect()
    }
}

impl GroupElement for ChamberPermutation {
    fn then(&self, other: &Self) -> Self {
        ChamberPermutation {
            images: self.images.iter().map(|c| other.apply(*c)).collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = self.images.clone();
        for (i, c) in self.images.iter().enumerate() {
            images[c.index()] = ChamberId(i as u8);
        }
        ChamberPermutation { images }
    }
}

impl fmt::Debug for ChamberPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ChamberPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.images.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", cells.join(" "))
    }
}

/// The chamber permutation induced by `map`, or `NotChamberMap` naming the
/// first chamber whose image is not a chamber.
pub fn induced_chamber_map(
    map: &LinearSymmetry,
    complex: &ChamberComplex,
) -> Result<ChamberPermutation> {
    let mut images = Vec::with_capacity(NUM_CHAMBERS);
    for ch in complex.chambers() {
        let not_chamber = || Error::NotChamberMap {
            chamber: ch.id.to_string(),
        };
        let image: RaySet = ch
            .rays
            .iter()
            .map(|r| complex.ray_at(&map.apply_vec(&complex.ray(r))))
            .collect::<Option<RaySet>>()
            .ok_or_else(not_chamber)?;
        images.push(complex.chamber_with_rays(image).ok_or_else(not_chamber)?);
    }
    if images.iter().collect::<BTreeSet<_>>().len() != NUM_CHAMBERS {
        return Err(Error::NotChamberMap {
            chamber: "two chambers share an image".into(),
        });
    }
    Ok(ChamberPermutation { images })
}

/// Basis used for lifting: the first six linearly independent rays in
/// `Ray::ALL` order.
pub fn lift_basis(complex: &ChamberComplex) -> Vec<Ray> {
    let mut chosen: Vec<Ray> = Vec::new();
    for r in Ray::ALL {
        let mut trial: Vec<[i64; 6]> = chosen.iter().map(|c| complex.ray(*c)).collect();
        trial.push(complex.ray(r));
        let rank = RationalMatrix::from_integer_rows(&trial).map_or(0, |m| m.rank());
        if rank == trial.len() {
            chosen.push(r);
        }
        if chosen.len() == 6 {
            break;
        }
    }
    chosen
}

/// The unique linear map sending every ray `r` to `p(r)`.
pub fn lift(p: &RayPermutation, complex: &ChamberComplex) -> Result<LinearSymmetry> {
    let basis = lift_basis(complex);
    if basis.len() != 6 {
        return Err(Error::RankDeficient);
    }
    let source: Vec<[i64; 6]> = basis.iter().map(|r| complex.ray(*r)).collect();
    let target: Vec<[i64; 6]> = basis.iter().map(|r| complex.ray(p.apply(*r))).collect();
    let source = RationalMatrix::from_integer_columns(&source)?;
    let target = RationalMatrix::from_integer_columns(&target)?;
    let m = target.mul(&exactmath::inverse(&source)?)?;

    for r in Ray::ALL {
        let v: Vec<Rational> = complex
            .ray(r)
            .iter()
            .map(|&x| exactmath::rational(x))
            .collect();
        let expected: Vec<Rational> = complex
            .ray(p.apply(r))
            .iter()
            .map(|&x| exactmath::rational(x))
            .collect();
        if m.mul_vec(&v)? != expected {
            return Err(Error::NoLift(format!("{p} is inconsistent on ray {r}")));
        }
    }

    let rows = m
        .to_integer_rows()
        .ok_or_else(|| Error::NotUnimodular(format!("lift of {p} is not integral")))?;
    let matrix: Matrix6 = std::array::from_fn(|i| std::array::from_fn(|j| rows[i][j]));
    LinearSymmetry::new(matrix)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialCheck {
    pub chamber: ChamberId,
    pub image: ChamberId,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryCertificate {
    pub map: LinearSymmetry,
    pub ray_permutation: Option<RayPermutation>,
    pub chamber_permutation: ChamberPermutation,
    pub polynomial_checks: Vec<PolynomialCheck>,
}

impl SymmetryCertificate {
    pub fn is_valid(&self) -> bool {
        self.polynomial_checks.iter().all(|c| c.holds)
    }

    pub fn passed(&self) -> usize {
        self.polynomial_checks.iter().filter(|c| c.holds).count()
    }

    pub fn ensure_valid(self) -> Result<Self> {
        let failing: Vec<String> = self
            .polynomial_checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.chamber.to_string())
            .collect();
        if failing.is_empty() {
            Ok(self)
        } else {
            Err(Error::PolynomialMismatch {
                chamber: failing.join(", "),
            })
        }
    }
}

/// Checks `P_{g(κ)} = P_κ ∘ F⁻¹` for every chamber `κ`.
pub fn certify_symmetry(
    map: &LinearSymmetry,
    complex: &ChamberComplex,
) -> Result<SymmetryCertificate> {
    if !map.is_unimodular() {
        return Err(Error::NotUnimodular(format!(
            "determinant is {}",
            map.determinant()
        )));
    }
    let g = induced_chamber_map(map, complex)?;
    let inv = map.try_inverse()?;
    let polynomial_checks = complex
        .chambers()
        .iter()
        .map(|ch| {
            let image = g.apply(ch.id);
            PolynomialCheck {
                chamber: ch.id,
                image,
                holds: complex.chamber(image).formula == ch.formula.compose(inv.matrix()),
            }
        })
        .collect();
    Ok(SymmetryCertificate {
        map: *map,
        ray_permutation: map.ray_permutation(complex),
        chamber_permutation: g,
        polynomial_checks,
    })
}

/// The exchange `S`, the S₃ generator `U`, the duality `T` and the
/// additional symmetry `X`, as coordinate maps with `ν₃` eliminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KnownSymmetries {
    pub s: LinearSymmetry,
    pub t: LinearSymmetry,
    pub u: LinearSymmetry,
    pub x: LinearSymmetry,
}

impl KnownSymmetries {
    pub fn named(&self) -> [(&'static str, LinearSymmetry); 4] {
        [("S", self.s), ("T", self.t), ("U", self.u), ("X", self.x)]
    }
}

pub fn known_symmetries() -> KnownSymmetries {
    let build = |f: fn(LrPoint) -> LrPoint| {
        LinearSymmetry::from_coordinate_map(f).expect("known symmetries are unimodular")
    };
    KnownSymmetries {
        s: build(|p| {
            let [l1, l2, m1, m2, n1, n2] = p.0;
            LrPoint([m1, m2, l1, l2, n1, n2])
        }),
        t: build(|p| {
            let [l1, l2, m1, m2, _, n2] = p.0;
            let n3 = nu3(p);
            LrPoint([l1, l1 - l2, m1, m1 - m2, l1 + m1 - n3, l1 + m1 - n2])
        }),
        u: build(|p| {
            let [_, l2, m1, m2, n1, n2] = p.0;
            let n3 = nu3(p);
            LrPoint([n1 - n3, n1 - n2, m1, m2, n1, n1 - l2])
        }),
        x: build(|p| {
            let [l1, l2, m1, m2, n1, n2] = p.0;
            LrPoint([l1 + m1 - n2, l2 + m1 - n2, n2, m2, n1, m1])
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryElement {
    pub ray_permutation: RayPermutation,
    pub map: LinearSymmetry,
    pub certificate: SymmetryCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub order: usize,
    pub valid_certificates: usize,
    pub lift_basis: Vec<Ray>,
    /// Whether `S`, `T`, `U`, `X` induce exactly `s`, `t`, `u`, `x` on the rays.
    pub generators_induce_named_permutations: bool,
    /// Order of the group generated by the ray permutations of `S`, `T`, `U`, `X`.
    pub generated_order: usize,
    /// Order of the matrix group generated by the lifts of `s`, `t`, `u`.
    pub known_subgroup_order: usize,
    pub chamber_orbit: Vec<ChamberId>,
}

impl SymmetryReport {
    pub fn is_transitive(&self) -> bool {
        self.chamber_orbit.len() == NUM_CHAMBERS
    }

    pub fn is_complete(&self) -> bool {
        self.valid_certificates == self.order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryGroup {
    pub elements: Vec<SymmetryElement>,
    pub report: SymmetryReport,
}

impl SymmetryGroup {
    pub fn maps(&self) -> impl Iterator<Item = &LinearSymmetry> {
        self.elements.iter().map(|e| &e.map)
    }

    /// `{F(p) : F in the group}`.
    pub fn orbit_of_triple(&self, p: LrPoint) -> BTreeSet<LrPoint> {
        self.maps().map(|f| f.apply(p)).collect()
    }
}

/// Lifts and certifies every linear symmetry of the rays.
pub fn full_symmetry_group(complex: &ChamberComplex) -> Result<SymmetryGroup> {
    let ray_group = ray_symmetry::ray_symmetry_group(complex)?;
    let perms: Vec<RayPermutation> = ray_group.into_iter().collect();
    let elements: Vec<SymmetryElement> = perms
        .into_par_iter()
        .map(|p| {
            let map = lift(&p, complex)?;
            let certificate = certify_symmetry(&map, complex)?;
            Ok(SymmetryElement {
                ray_permutation: p,
                map,
                certificate,
            })
        })
        .collect::<Result<_>>()?;

    let known = known_symmetries();
    let named = [
        generators::s(),
        generators::t(),
        generators::u(),
        generators::x(),
    ];
    let induced: Vec<RayPermutation> = known
        .named()
        .iter()
        .map(|(_, f)| f.ray_permutation(complex))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::NotChamberMap {
            chamber: "a known symmetry does not permute the rays".into(),
        })?;
    let generated_order = PermGroup::generate(RayPermutation::identity(), &induced).order();

    let known_lifts = named[..3]
        .iter()
        .map(|p| lift(p, complex))
        .collect::<Result<Vec<_>>>()?;
    let known_subgroup_order =
        PermGroup::generate(LinearSymmetry::identity(), &known_lifts).order();

    let chamber_maps: Vec<ChamberPermutation> = elements
        .iter()
        .map(|e| e.certificate.chamber_permutation.clone())
        .collect();
    let chamber_orbit = orbit(chamber_maps.iter(), ChamberId(0), |g, c| g.apply(*c))
        .into_iter()
        .collect();

    let report = SymmetryReport {
        order: elements.len(),
        valid_certificates: elements.iter().filter(|e| e.certificate.is_valid()).count(),
        lift_basis: lift_basis(complex),
        generators_induce_named_permutations: induced == named,
        generated_order,
        known_subgroup_order,
        chamber_orbit,
    };
    Ok(SymmetryGroup { elements, report })
}
