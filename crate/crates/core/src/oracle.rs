//! Independent branching oracle: SU(3) weight multiplicities by Freudenthal's
//! recursion, then the SO(3) content of the S¹-fixed weights.
//!
//! Weights use the same (λ₁,λ₂) coordinates as the closed-form
//! multiplicity. In those coordinates the simple roots are (1,−1) and (1,2),
//! their sum (2,1) is the third positive root, and ρ = (2,1).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};

/// Default cap on z₁ for the oracle.
pub const DEFAULT_LIMIT: u32 = 40;

const RHO: (i64, i64) = (2, 1);
// (root in λ-coordinates, coefficients in terms of the simple roots)
const POSITIVE_ROOTS: [((i64, i64), (i64, i64)); 3] =
    [((1, -1), (1, 0)), ((1, 2), (0, 1)), ((2, 1), (1, 1))];

/// Inner product scaled by 3 so that it stays integral.
fn ip3(a: (i64, i64), b: (i64, i64)) -> i64 {
    4 * (a.0 * b.0 + a.1 * b.1) - 2 * (a.0 * b.1 + a.1 * b.0)
}

/// Weights of one irreducible SU(3) representation with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    weights: BTreeMap<(i64, i64), u64>,
}

impl WeightMultiset {
    pub fn get(&self, w: (i64, i64)) -> u64 {
        self.weights.get(&w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.weights.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

fn freudenthal(z1: i64, z2: i64) -> WeightMultiset {
    let depth_max = 3 * (z1 + z2);
    let n = (depth_max + 1) as usize;
    // mult[a][b] for μ = Λ − a·(1,−1) − b·(1,2)
    let mut mult = vec![vec![0u64; n]; n];
    let at = |a: i64, b: i64| (z1 - a - b, z2 + a - 2 * b);
    let shifted = |w: (i64, i64)| (w.0 + RHO.0, w.1 + RHO.1);
    let top = ip3(shifted((z1, z2)), shifted((z1, z2)));

    for d in 0..=depth_max {
        for a in 0..=d {
            let b = d - a;
            if d == 0 {
                mult[0][0] = 1;
                continue;
            }
            let mu = at(a, b);
            let den = top - ip3(shifted(mu), shifted(mu));
            if den <= 0 {
                continue;
            }
            let mut s: i64 = 0;
            for (root, (ca, cb)) in POSITIVE_ROOTS {
                let mut k = 1;
                while a - k * ca >= 0 && b - k * cb >= 0 {
                    let (na, nb) = (a - k * ca, b - k * cb);
                    let m = mult[na as usize][nb as usize];
                    if m > 0 {
                        s += ip3(at(na, nb), root) * m as i64;
                    }
                    k += 1;
                }
            }
            debug_assert!((2 * s) % den == 0, "non-integral Freudenthal step");
            let val = 2 * s / den;
            if val > 0 {
                mult[a as usize][b as usize] = val as u64;
            }
        }
    }

    let mut weights = BTreeMap::new();
    for (a, row) in mult.iter().enumerate() {
        for (b, &m) in row.iter().enumerate() {
            if m > 0 {
                weights.insert(at(a as i64, b as i64), m);
            }
        }
    }
    WeightMultiset { weights }
}

/// Memoizing oracle with an explicit cap on z₁.
#[derive(Debug)]
pub struct BranchingOracle {
    limit: u32,
    cache: RwLock<HashMap<(u32, u32), Arc<WeightMultiset>>>,
}

impl Default for BranchingOracle {
    fn default() -> Self {
        Self::new(DEFAULT_LIMIT)
    }
}

impl BranchingOracle {
    pub fn new(limit: u32) -> Self {
        BranchingOracle {
            limit,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn limit(&self) -> u32 {
        self.limit
    }

    fn check(&self, z1: i64, z2: i64) -> Result<(u32, u32)> {
        if z2 < 0 || z1 < z2 {
            return Err(Error::Domain(format!(
                "oracle needs z1 >= z2 >= 0, got ({z1},{z2})"
            )));
        }
        if z1 > self.limit as i64 {
            return Err(Error::OracleBoundExceeded {
                requested: z1.min(u32::MAX as i64) as u32,
                limit: self.limit,
            });
        }
        Ok((z1 as u32, z2 as u32))
    }

    pub fn weight_multiplicities_su3(&self, z1: i64, z2: i64) -> Result<Arc<WeightMultiset>> {
        let key = self.check(z1, z2)?;
        if let Some(w) = self.cache.read().expect("oracle cache poisoned").get(&key) {
            return Ok(Arc::clone(w));
        }
        let w = Arc::new(freudenthal(z1, z2));
        self.cache
            .write()
            .expect("oracle cache poisoned")
            .insert(key, Arc::clone(&w));
        Ok(w)
    }

    /// z₃ ↦ number of copies of the (2z₃+1)-dimensional SO(3) module on the
    /// S¹-fixed subspace of the (z₁,z₂) representation.
    pub fn so3_content(&self, z1: i64, z2: i64) -> Result<BTreeMap<u32, u64>> {
        let w = self.weight_multiplicities_su3(z1, z2)?;
        // fixed weights have c₁ + c₂ = 0; their sl₂ weight is c₁ − c₂
        let mut fixed: BTreeMap<i64, u64> = BTreeMap::new();
        for ((c1, c2), m) in w.iter() {
            if c1 + c2 == 0 {
                *fixed.entry(c1 - c2).or_default() += m;
            }
        }
        let mut content = BTreeMap::new();
        for (&k, &m) in fixed.range(0..) {
            let above = fixed.get(&(k + 2)).copied().unwrap_or(0);
            let strings = m - above;
            if strings > 0 {
                content.insert((k / 2) as u32, strings);
            }
        }
        Ok(content)
    }
}
