//! Weight arithmetic and the generalized Freudenthal Casimir evaluator
//! `c_g(λ) = g(λ, λ + 2ρ)`.
//!
//! Weights carry doubled integer coordinates so that half-integral weights
//! such as ρ = 2λ₁ + λ₂ + μ₁/2 are exact without touching rationals in the
//! combinatorial code. Gram matrices are exact rationals.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::{int, ratio, zero, Rational};

/// Weight bases with preset Gram data.
///
/// * `Su3`: (λ₁, λ₂) with λ₃ = −λ₁ − λ₂ eliminated.
/// * `So3`: (μ₁), the positive root of the SO(3) fibre.
/// * `Su3So3`: (λ₁, λ₂, μ₁), the product algebra su(3) ⊕ su(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisId {
    Su3,
    So3,
    Su3So3,
}

impl BasisId {
    pub fn rank(self) -> usize {
        match self {
            BasisId::Su3 => 2,
            BasisId::So3 => 1,
            BasisId::Su3So3 => 3,
        }
    }

    /// Positive roots, as integral weights in this basis.
    pub fn positive_roots(self) -> Vec<Weight> {
        let su3 = [[1, -1], [2, 1], [1, 2]];
        match self {
            BasisId::Su3 => su3
                .iter()
                .map(|r| Weight::integral(self, r).expect("rank 2"))
                .collect(),
            BasisId::So3 => vec![Weight::integral(self, &[1]).expect("rank 1")],
            BasisId::Su3So3 => su3
                .iter()
                .map(|r| Weight::integral(self, &[r[0], r[1], 0]).expect("rank 3"))
                .chain(std::iter::once(
                    Weight::integral(self, &[0, 0, 1]).expect("rank 3"),
                ))
                .collect(),
        }
    }
}

/// A weight in a fixed basis, stored as twice its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    basis: BasisId,
    doubled: Vec<i64>,
}

impl Weight {
    /// Build from doubled coordinates (so `[1]` in `So3` is μ₁/2).
    pub fn from_doubled(basis: BasisId, doubled: Vec<i64>) -> Result<Self> {
        if doubled.len() != basis.rank() {
            return Err(Error::RankMismatch {
                basis,
                rank: basis.rank(),
                found: doubled.len(),
            });
        }
        Ok(Weight { basis, doubled })
    }

    /// Build from ordinary integer coordinates.
    pub fn integral(basis: BasisId, coords: &[i64]) -> Result<Self> {
        Self::from_doubled(basis, coords.iter().map(|c| 2 * c).collect())
    }

    pub fn zero(basis: BasisId) -> Self {
        Weight {
            basis,
            doubled: vec![0; basis.rank()],
        }
    }

    /// The SU(3) × SO(3) highest weight z₁λ₁ + z₂λ₂ + z₃μ₁.
    pub fn su3_so3(z1: i64, z2: i64, z3: i64) -> Self {
        Weight {
            basis: BasisId::Su3So3,
            doubled: vec![2 * z1, 2 * z2, 2 * z3],
        }
    }

    pub fn basis(&self) -> BasisId {
        self.basis
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    /// Coordinates as rationals.
    pub fn coords(&self) -> Vec<Rational> {
        self.doubled.iter().map(|&d| ratio(d, 2)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|d| d % 2 == 0)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        same_basis(self.basis, other.basis)?;
        Ok(Weight {
            basis: self.basis,
            doubled: self
                .doubled
                .iter()
                .zip(&other.doubled)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.checked_add(&-other)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            basis: self.basis,
            doubled: self.doubled.iter().map(|d| -d).collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;

    /// Panics on a basis mismatch; use [`Weight::checked_add`] otherwise.
    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs)
            .expect("adding weights of different bases")
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.checked_sub(rhs)
            .expect("subtracting weights of different bases")
    }
}

fn same_basis(expected: BasisId, found: BasisId) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::BasisMismatch { expected, found })
    }
}

/// A symmetric bilinear form on a weight basis together with 2ρ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramData {
    basis: BasisId,
    gram: Vec<Vec<Rational>>,
    two_rho: Weight,
}

impl GramData {
    pub fn new(basis: BasisId, gram: Vec<Vec<Rational>>, two_rho: Weight) -> Result<Self> {
        let n = basis.rank();
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(Error::Domain(format!(
                "Gram matrix must be {n}x{n} for basis {basis:?}"
            )));
        }
        let symmetric = (0..n).all(|i| (0..i).all(|j| gram[i][j] == gram[j][i]));
        if !symmetric {
            return Err(Error::Domain("Gram matrix is not symmetric".into()));
        }
        same_basis(basis, two_rho.basis)?;
        Ok(GramData {
            basis,
            gram,
            two_rho,
        })
    }

    /// su(3) in the normalisation g₁,₁: g(λᵢ,λᵢ) = 4/3, g(λ₁,λ₂) = −2/3,
    /// ρ = 2λ₁ + λ₂.
    pub fn su3() -> Self {
        let d = ratio(4, 3);
        let o = ratio(-2, 3);
        GramData {
            basis: BasisId::Su3,
            gram: vec![vec![d.clone(), o.clone()], vec![o, d]],
            two_rho: Weight::integral(BasisId::Su3, &[4, 2]).expect("rank 2"),
        }
    }

    /// so(3) fibre: g(μ₁,μ₁) = 4, 2ρ = μ₁.
    pub fn so3() -> Self {
        GramData {
            basis: BasisId::So3,
            gram: vec![vec![int(4)]],
            two_rho: Weight::integral(BasisId::So3, &[1]).expect("rank 1"),
        }
    }

    /// Orthogonal sum of [`GramData::su3`] and [`GramData::so3`];
    /// ρ = 2λ₁ + λ₂ + μ₁/2.
    pub fn su3_so3() -> Self {
        let d = ratio(4, 3);
        let o = ratio(-2, 3);
        GramData {
            basis: BasisId::Su3So3,
            gram: vec![
                vec![d.clone(), o.clone(), zero()],
                vec![o, d, zero()],
                vec![zero(), zero(), int(4)],
            ],
            two_rho: Weight::integral(BasisId::Su3So3, &[4, 2, 1]).expect("rank 3"),
        }
    }

    pub fn basis(&self) -> BasisId {
        self.basis
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn two_rho(&self) -> &Weight {
        &self.two_rho
    }

    /// g(a, b) for weights in this basis.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        same_basis(self.basis, a.basis)?;
        same_basis(self.basis, b.basis)?;
        let mut acc = zero();
        for (i, &ai) in a.doubled.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.doubled.iter().enumerate() {
                if bj != 0 {
                    acc += &self.gram[i][j] * int(ai * bj);
                }
            }
        }
        Ok(acc / int(4))
    }
}

/// c_g(λ) = g(λ, λ + 2ρ).
pub fn casimir_eigenvalue(lambda: &Weight, data: &GramData) -> Result<Rational> {
    same_basis(data.basis, lambda.basis)?;
    let shifted = lambda.checked_add(&data.two_rho)?;
    data.inner(lambda, &shifted)
}

fn nonneg(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        Err(Error::Domain(format!(
            "{name} must be nonnegative, got {v}"
        )))
    } else {
        Ok(())
    }
}

/// Closed form 4(z₁² + z₂² − z₁(z₂ − 3))/3 for the su(3) Casimir.
pub fn su3_casimir(z1: i64, z2: i64) -> Result<Rational> {
    nonneg("z2", z2)?;
    if z1 < z2 {
        return Err(Error::Domain(format!("need z1 >= z2, got ({z1},{z2})")));
    }
    Ok(ratio(4 * (z1 * z1 + z2 * z2 - z1 * (z2 - 3)), 3))
}

/// 4z₃(z₃ + 1).
pub fn so3_casimir(z3: i64) -> Result<Rational> {
    nonneg("z3", z3)?;
    Ok(int(4 * z3 * (z3 + 1)))
}

/// Killing-normalised Casimir of sp(2) on n₁ω₁ + n₂ω₂.
pub fn sp2_casimir_killing(n1: i64, n2: i64) -> Result<Rational> {
    nonneg("n1", n1)?;
    nonneg("n2", n2)?;
    let num = n1 * (n1 + 2) + n1 * (n2 + 2) + n2 * (n1 + 2) + n2 * (n2 + 2) + 2 * n2 * (n2 + 2);
    Ok(ratio(num, 12))
}

/// Killing-normalised Casimir of su(5) on Σ nᵢωᵢ.
pub fn su5_casimir_killing(n: [i64; 4]) -> Result<Rational> {
    for (i, &v) in n.iter().enumerate() {
        nonneg(&format!("n{}", i + 1), v)?;
    }
    let [n1, n2, n3, n4] = n;
    let num = (4 * n1 + 3 * n2 + 2 * n3 + n4) * (2 + n1)
        + (3 * n1 + 6 * n2 + 4 * n3 + 2 * n4) * (2 + n2)
        + (2 * n1 + 4 * n2 + 6 * n3 + 3 * n4) * (2 + n3)
        + (n1 + 2 * n2 + 3 * n3 + 4 * n4) * (2 + n4);
    Ok(ratio(num, 50))
}
