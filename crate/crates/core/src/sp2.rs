//! Branching from Sp(2)×Sp(1) to the diagonal Sp(1) for the
//! homogeneous 7-sphere Sp(2)×Sp(1)/Sp(1)′.
//!
//! Coordinates are doubled throughout so half-integers stay exact. In the
//! restricted coordinates (ν₀•, ν₁•) the positive roots left over after
//! restriction are (½,½), (−½,½) and (0,1).

use crate::error::{Error, Result};

/// Highest weight n₁ω₁ + n₂ω₂ + n₃ω₃ of Sp(2)×Sp(1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sp2Triple {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
}

impl Sp2Triple {
    pub fn new(n1: i64, n2: i64, n3: i64) -> Result<Self> {
        let conv = |n: i64| {
            u32::try_from(n).map_err(|_| {
                Error::Domain(format!("coefficient {n} must be a nonnegative integer"))
            })
        };
        Ok(Sp2Triple {
            n1: conv(n1)?,
            n2: conv(n2)?,
            n3: conv(n3)?,
        })
    }

    pub fn multiplicity(&self) -> u64 {
        sp2_multiplicity(self.n1, self.n2, self.n3)
    }

    pub fn is_spherical(&self) -> bool {
        self.multiplicity() > 0
    }
}

/// Number of ways to write (a₀, a₁) (given doubled) as a nonnegative
/// combination of the restricted positive roots.
///
/// With m₁(½,½) + m₂(−½,½) + m₃(0,1): m₁ = m₂ + 2a₀ and m₂ + m₃ = a₁ − a₀,
/// so a₁ − a₀ must be an integer and m₂ runs over max(0,−2a₀) ..= a₁ − a₀.
/// Only requiring a₁ ∈ ℕ₀ would admit (a₀,a₁) = (½,1), which has no solution.
pub fn sp2_partition(a0_doubled: i64, a1_doubled: i64) -> u64 {
    if (a0_doubled + a1_doubled).rem_euclid(2) != 0 {
        return 0;
    }
    let n = (a1_doubled - a0_doubled.abs()) / 2 + 1;
    n.max(0) as u64
}

/// Alternating Weyl sum over the 16 elements of W(Sp(2)) × W(Sp(1)).
pub fn sp2_multiplicity(n1: u32, n2: u32, n3: u32) -> u64 {
    // doubled λ+ρ in (ν₀, ν₁, ν₁′)
    let a = n2 as i64 + 1;
    let b = n1 as i64 + n2 as i64 + 2;
    let c = n3 as i64 + 1;
    let mut total: i64 = 0;
    for (swap_sign, (p, q)) in [(1, (a, b)), (-1, (b, a))] {
        for s0 in [1, -1] {
            for s1 in [1, -1] {
                for s2 in [1, -1] {
                    let (x0, x1, x2) = (s0 * p, s1 * q, s2 * c);
                    // restrict ν₁, ν₁′ ↦ ν₁•, then subtract doubled ρ̄ = (1, 3)
                    let term = sp2_partition(x0 - 1, x1 + x2 - 3) as i64;
                    total += swap_sign * s0 * s1 * s2 * term;
                }
            }
        }
    }
    debug_assert!(total >= 0, "negative branching multiplicity");
    total.max(0) as u64
}

pub fn is_sp1prime_spherical(n1: u32, n2: u32, n3: u32) -> bool {
    sp2_multiplicity(n1, n2, n3) > 0
}
