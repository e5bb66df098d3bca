//! Spectrum enumeration up to a bound, exact merging of coinciding
//! eigenvalues, and the derived spectral queries.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::aloff_wallach::{
    dim_su3, is_s1_spherical, multiplicity_m, multiplicity_unchecked, SphericalTriple,
};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Metric parameters (t₀, t₁) of g = t₀·g|𝔥₀ + t₁·g|𝔥.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MetricParams {
    t0: Rational,
    t1: Rational,
}

impl MetricParams {
    pub fn new(t0: Rational, t1: Rational) -> Result<Self> {
        if !t0.is_positive() || !t1.is_positive() {
            return Err(Error::NonPositiveMetric { t0, t1 });
        }
        Ok(MetricParams { t0, t1 })
    }

    pub fn t0(&self) -> &Rational {
        &self.t0
    }

    pub fn t1(&self) -> &Rational {
        &self.t1
    }
}

/// One distinct eigenvalue with its full multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub eigenvalue: Rational,
    pub multiplicity: u64,
    /// Contributing triples in lexicographic order.
    pub triples: Vec<SphericalTriple>,
}

/// Eigenvalues in strictly ascending order. Every eigenvalue `<= bound` is
/// present with its full multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub params: MetricParams,
    pub entries: Vec<SpectrumEntry>,
    pub bound: Rational,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter().map(|e| &e.eigenvalue)
    }

    fn from_triples(params: MetricParams, triples: Vec<SphericalTriple>, bound: Rational) -> Self {
        let mut merged: BTreeMap<Rational, Vec<SphericalTriple>> = BTreeMap::new();
        for t in triples {
            merged
                .entry(t.eigen_pair().at(&params))
                .or_default()
                .push(t);
        }
        let entries = merged
            .into_iter()
            .map(|(eigenvalue, mut triples)| {
                triples.sort();
                SpectrumEntry {
                    eigenvalue,
                    multiplicity: triples.iter().map(|t| t.total_mult).sum(),
                    triples,
                }
            })
            .collect();
        Spectrum {
            params,
            entries,
            bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumQuery {
    UpTo(Rational),
    FirstN(usize),
}

fn floor_nonneg(x: &Rational) -> BigInt {
    x.floor().to_integer().max(BigInt::zero())
}

fn to_i64(x: BigInt) -> i64 {
    x.to_i64().expect("enumeration range exceeds i64")
}

/// All spherical triples whose eigenvalue at `params` is `<= bound`, in
/// lexicographic order.
///
/// Completeness: v = 4z₃(z₃+1) ≤ t₁·bound caps z₃, and since h ≥ 0 the
/// su(3) Casimir h + v ≤ t₀·bound + v, which caps z₁ through
/// c_su3(z₁,z₂) ≥ z₁².
pub fn enumerate_spherical(
    bound: &Rational,
    params: &MetricParams,
) -> Result<Vec<SphericalTriple>> {
    if bound.is_negative() {
        return Err(Error::NegativeBound(bound.clone()));
    }
    let vertical_cap = to_i64(floor_nonneg(&(params.t1() * bound)));
    let mut z3_max = 0i64;
    while 4 * (z3_max + 1) * (z3_max + 2) <= vertical_cap {
        z3_max += 1;
    }
    let horizontal_cap = params.t0() * bound;

    let cells: Vec<(i64, i64)> = (0..=z3_max)
        .flat_map(|z3| {
            let cap = &horizontal_cap + int(4 * z3 * (z3 + 1));
            let z1_max = to_i64(floor_nonneg(&cap).sqrt());
            (3 * z3 / 2..=z1_max).map(move |z1| (z3, z1))
        })
        .collect();

    let mut out: Vec<SphericalTriple> = cells
        .par_iter()
        .flat_map_iter(|&(z3, z1)| {
            (0..=z1)
                .filter(move |&z2| {
                    is_s1_spherical(z1, z2) && z1 + z2 >= 3 * z3 && 2 * z1 - z2 >= 3 * z3
                })
                .filter_map(move |z2| {
                    SphericalTriple::from_parts(z1, z2, z3, multiplicity_unchecked(z1, z2, z3))
                })
                .filter(|t| t.eigen_pair().at(params) <= *bound)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The merged spectrum, either up to a bound or the first `n` distinct
/// eigenvalues (starting from 0).
pub fn build_spectrum(params: &MetricParams, query: SpectrumQuery) -> Result<Spectrum> {
    match query {
        SpectrumQuery::UpTo(bound) => {
            let triples = enumerate_spherical(&bound, params)?;
            Ok(Spectrum::from_triples(params.clone(), triples, bound))
        }
        SpectrumQuery::FirstN(n) => {
            if n == 0 {
                return Err(Error::Domain("first_n must be at least 1".into()));
            }
            // The first nonzero eigenvalue never exceeds 12/t₀.
            let mut bound = int(12) / params.t0();
            loop {
                let triples = enumerate_spherical(&bound, params)?;
                let mut spec = Spectrum::from_triples(params.clone(), triples, bound.clone());
                if spec.entries.len() >= n {
                    spec.entries.truncate(n);
                    spec.bound = spec.entries[n - 1].eigenvalue.clone();
                    return Ok(spec);
                }
                bound *= int(2);
            }
        }
    }
}

/// Smallest nonzero eigenvalue together with its triples.
pub fn first_eigenvalue_entry(params: &MetricParams) -> SpectrumEntry {
    build_spectrum(params, SpectrumQuery::FirstN(2))
        .expect("params already validated")
        .entries
        .pop()
        .expect("spectrum has a nonzero eigenvalue")
}

pub fn first_eigenvalue(params: &MetricParams) -> Rational {
    first_eigenvalue_entry(params).eigenvalue
}

/// Spectrum restricted to z₃ = 0, i.e. the eigenvalues pulled back from
/// ℂP² through the submersion.
pub fn basic_spectrum(params: &MetricParams, bound: &Rational) -> Result<Spectrum> {
    let triples = enumerate_spherical(bound, params)?
        .into_iter()
        .filter(|t| t.z3 == 0)
        .collect();
    Ok(Spectrum::from_triples(
        params.clone(),
        triples,
        bound.clone(),
    ))
}

/// Eigenvalues 4z₃(z₃+1)/t₁ of the SO(3) fibre with the bi-regular
/// multiplicity (2z₃+1)².
pub fn fiber_spectrum(t1: &Rational, z3_max: u32) -> Result<Vec<(Rational, u64)>> {
    if !t1.is_positive() {
        return Err(Error::NonPositiveMetric {
            t0: int(1),
            t1: t1.clone(),
        });
    }
    Ok((0..=z3_max as i64)
        .map(|z3| {
            (
                int(4 * z3 * (z3 + 1)) / t1,
                ((2 * z3 + 1) * (2 * z3 + 1)) as u64,
            )
        })
        .collect())
}

/// Total multiplicity of the (z₁,z₂) class at the normal homogeneous point
/// t₀ = t₁, where all z₃ branches coincide.
pub fn aggregate_su3_multiplicity(z1: i64, z2: i64) -> Result<u64> {
    let dim = dim_su3(z1, z2)?;
    let mut total = 0;
    for z3 in 0..=(z1 + z2) / 3 {
        total += multiplicity_m(z1, z2, z3)? * dim * (2 * z3 + 1) as u64;
    }
    Ok(total)
}

/// One eigenvalue of the Berger-type deformation of SU(2) (or SO(3)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergerEigenvalue {
    pub n1: u32,
    pub n2: u32,
    /// S¹-weight n₁ − 2n₂.
    pub weight: i64,
    pub eigenvalue: Rational,
}

/// (n₁(2n₁+1) − (n₁−2n₂)²)/t₀ + (n₁−2n₂)²/t₁ for 0 ≤ n₂ ≤ n₁ ≤ n1_max,
/// keeping only even n₁ when `so3_only`.
pub fn su2_berger_spectrum(
    params: &MetricParams,
    n1_max: u32,
    so3_only: bool,
) -> Vec<BergerEigenvalue> {
    let mut out = Vec::new();
    for n1 in (0..=n1_max).filter(|n| !so3_only || n % 2 == 0) {
        for n2 in 0..=n1 {
            let (a, b) = (n1 as i64, n2 as i64);
            let k = a - 2 * b;
            let eigenvalue = int(a * (2 * a + 1) - k * k) / params.t0() + int(k * k) / params.t1();
            out.push(BergerEigenvalue {
                n1,
                n2,
                weight: k,
                eigenvalue,
            });
        }
    }
    out
}
