//! Branching combinatorics for W^{1,1} = SU(3)/S¹ realised as
//! (SU(3) × SO(3))/U•(2).
//!
//! A representation ϱ(z₁,z₂,z₃) with highest weight z₁λ₁ + z₂λ₂ + z₃μ₁
//! contributes to the spectrum exactly when its U•(2)-fixed space is
//! nonzero. Its dimension `m(z₁,z₂,z₃)` is a seven-term alternating sum of
//! the restricted Kostant partition function [`partition`].

use crate::error::{Error, Result};
use crate::freudenthal::{so3_casimir, su3_casimir};
use crate::rational::Rational;
use crate::spectrum::MetricParams;

/// Number of (m₁,m₂,m₃) ∈ ℕ₀³ with a₁ = 3(m₁+m₂) and a₂ = m₃ − m₁ − 2m₂.
///
/// Defined for every integer input; zero off the lattice.
pub fn partition(a1: i64, a2: i64) -> u64 {
    if a1 < 0 || a1 % 3 != 0 {
        return 0;
    }
    let q = a1 / 3;
    (q + 1 + (a2 + q).min(0)).max(0) as u64
}

fn check_dominant(z1: i64, z2: i64) -> Result<()> {
    if z2 < 0 || z1 < z2 {
        Err(Error::Domain(format!(
            "need z1 >= z2 >= 0, got ({z1},{z2})"
        )))
    } else {
        Ok(())
    }
}

fn check_z3(z3: i64) -> Result<()> {
    if z3 < 0 {
        Err(Error::Domain(format!("need z3 >= 0, got {z3}")))
    } else {
        Ok(())
    }
}

pub(crate) fn multiplicity_unchecked(z1: i64, z2: i64, z3: i64) -> u64 {
    let p = |a1, a2| partition(a1, a2) as i64;
    let s = z1 + z2;
    let t = z1 - 2 * z2 - 3;
    let m = p(s, -z3 - z1 - 2) + p(s, z3 - z2) - p(s, -z3 - z2 - 1) - p(s, z3 - z1 - 1)
        + p(t, z2 + 1 - z3)
        + p(t, z2 - z1 + z3)
        - p(t, z2 + 2 + z3);
    u64::try_from(m)
        .unwrap_or_else(|_| panic!("negative branching multiplicity {m} at ({z1},{z2},{z3})"))
}

/// Multiplicity of the trivial U•(2)-representation in ϱ(z₁,z₂,z₃).
pub fn multiplicity_m(z1: i64, z2: i64, z3: i64) -> Result<u64> {
    check_dominant(z1, z2)?;
    check_z3(z3)?;
    Ok(multiplicity_unchecked(z1, z2, z3))
}

/// ϱ₀(z₁,z₂) has S¹-fixed vectors iff z₁ + z₂ ≡ 0 (mod 3).
pub fn is_s1_spherical(z1: i64, z2: i64) -> bool {
    (z1 + z2).rem_euclid(3) == 0
}

pub fn dim_su3(z1: i64, z2: i64) -> Result<u64> {
    check_dominant(z1, z2)?;
    Ok(((z1 - z2 + 1) * (z1 + 2) * (z2 + 1) / 2) as u64)
}

pub fn dim_so3(z3: i64) -> Result<u64> {
    check_z3(z3)?;
    Ok((2 * z3 + 1) as u64)
}

/// One U•(2)-spherical representation ϱ(z₁,z₂,z₃) with its multiplicity data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SphericalTriple {
    pub z1: u32,
    pub z2: u32,
    pub z3: u32,
    /// Dimension of the U•(2)-fixed subspace.
    pub m: u64,
    pub dim_su3: u64,
    pub dim_so3: u64,
    /// `m · dim_su3 · dim_so3`, the multiplicity of the eigenvalue it produces.
    pub total_mult: u64,
}

impl SphericalTriple {
    /// `Ok(None)` when ϱ(z₁,z₂,z₃) is not spherical.
    pub fn new(z1: i64, z2: i64, z3: i64) -> Result<Option<Self>> {
        let m = multiplicity_m(z1, z2, z3)?;
        Ok(Self::from_parts(z1, z2, z3, m))
    }

    pub(crate) fn from_parts(z1: i64, z2: i64, z3: i64, m: u64) -> Option<Self> {
        if m == 0 {
            return None;
        }
        let dim_su3 = ((z1 - z2 + 1) * (z1 + 2) * (z2 + 1) / 2) as u64;
        let dim_so3 = (2 * z3 + 1) as u64;
        Some(SphericalTriple {
            z1: z1 as u32,
            z2: z2 as u32,
            z3: z3 as u32,
            m,
            dim_su3,
            dim_so3,
            total_mult: m * dim_su3 * dim_so3,
        })
    }

    pub fn key(&self) -> (u32, u32, u32) {
        (self.z1, self.z2, self.z3)
    }

    pub fn eigen_pair(&self) -> EigenPair {
        EigenPair::from_casimirs(self.z1 as i64, self.z2 as i64, self.z3 as i64)
    }
}

/// η(t₀,t₁) = h/t₀ + v/t₁, independent of the metric.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenPair {
    /// Horizontal coefficient c_su3 − c_so3.
    pub h: Rational,
    /// Vertical coefficient c_so3.
    pub v: Rational,
}

impl EigenPair {
    fn from_casimirs(z1: i64, z2: i64, z3: i64) -> Self {
        let v = so3_casimir(z3).expect("z3 checked");
        let h = su3_casimir(z1, z2).expect("z1 >= z2 >= 0 checked") - &v;
        EigenPair { h, v }
    }

    pub fn at(&self, params: &MetricParams) -> Rational {
        &self.h / params.t0() + &self.v / params.t1()
    }
}

/// The (h, v) pair of a spherical triple. Non-spherical triples are
/// rejected so no phantom eigenvalues can be produced.
pub fn eigen_pair(z1: i64, z2: i64, z3: i64) -> Result<EigenPair> {
    if multiplicity_m(z1, z2, z3)? == 0 {
        return Err(Error::NotSpherical { z1, z2, z3 });
    }
    Ok(EigenPair::from_casimirs(z1, z2, z3))
}

/// η(z₁,z₂,z₃) at the metric g_{t₀,t₁}.
pub fn eigenvalue_at(z1: i64, z2: i64, z3: i64, t0: &Rational, t1: &Rational) -> Result<Rational> {
    let params = MetricParams::new(t0.clone(), t1.clone())?;
    Ok(eigen_pair(z1, z2, z3)?.at(&params))
}

/// Spherical triples in lexicographic (z₁,z₂,z₃) order, without end.
pub fn spherical_triples_lex() -> impl Iterator<Item = SphericalTriple> {
    (0i64..).flat_map(|z1| {
        (0..=z1).flat_map(move |z2| {
            // m vanishes once 3z₃ > z₁ + z₂.
            let z3_max = if is_s1_spherical(z1, z2) {
                (z1 + z2) / 3
            } else {
                -1
            };
            (0..=z3_max).filter_map(move |z3| {
                SphericalTriple::from_parts(z1, z2, z3, multiplicity_unchecked(z1, z2, z3))
            })
        })
    })
}
