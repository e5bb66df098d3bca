//! Invariant suites behind `awspec check`.

use awspec_core::{
    aggregate_su3_multiplicity, build_spectrum, f1, f2, first_eigenvalue, int,
    is_sp1prime_spherical, multiplicity_m, partition, ratio, sp2_partition, BranchingOracle,
    MetricParams, Rational, SpectrumQuery,
};
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Oracle,
    Urakawa,
    Sp2,
    Estimates,
    All,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub suite: &'static str,
    pub counterexample: Option<String>,
    /// Informational findings that are not failures.
    pub notes: Vec<String>,
}

impl Outcome {
    fn new(suite: &'static str, counterexample: Option<String>) -> Self {
        Outcome {
            suite,
            counterexample,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub const URAKAWA_CLASSES: [((i64, i64), u64); 8] = [
    ((0, 0), 1),
    ((2, 1), 32),
    ((3, 0), 30),
    ((3, 3), 30),
    ((4, 2), 243),
    ((5, 1), 280),
    ((5, 4), 280),
    ((6, 0), 140),
];

pub fn run(suite: Suite, depth: Option<u32>, oracle: &BranchingOracle) -> Vec<Outcome> {
    match suite {
        Suite::Oracle => vec![oracle_suite(depth.unwrap_or(12), oracle)],
        Suite::Urakawa => vec![urakawa_suite()],
        Suite::Sp2 => vec![sp2_suite(depth.unwrap_or(10))],
        Suite::Estimates => vec![estimates_suite()],
        Suite::All => vec![
            oracle_suite(depth.unwrap_or(12), oracle),
            urakawa_suite(),
            sp2_suite(depth.unwrap_or(10)),
            estimates_suite(),
        ],
    }
}

/// Closed-form multiplicity against the Freudenthal oracle for z₁ ≤ depth.
pub fn oracle_suite(depth: u32, oracle: &BranchingOracle) -> Outcome {
    let mut notes = Vec::new();
    for z1 in 0..=depth as i64 {
        for z2 in 0..=z1 {
            let content = match oracle.so3_content(z1, z2) {
                Ok(c) => c,
                Err(e) => return Outcome::new("oracle", Some(e.to_string())),
            };
            for z3 in 0..=(z1 + z2) {
                let expected = content.get(&(z3 as u32)).copied().unwrap_or(0);
                let got = multiplicity_m(z1, z2, z3).expect("valid triple");
                if got != expected {
                    return Outcome::new(
                        "oracle",
                        Some(format!(
                            "({z1},{z2},{z3}): closed form {got}, oracle {expected}"
                        )),
                    );
                }
                if got > 1 && notes.is_empty() {
                    notes.push(format!("m({z1},{z2},{z3}) = {got} > 1"));
                }
            }
        }
    }
    Outcome {
        suite: "oracle",
        counterexample: None,
        notes,
    }
}

/// Aggregated class multiplicities at t₀ = t₁ and the merged spectrum.
pub fn urakawa_suite() -> Outcome {
    for ((z1, z2), expected) in URAKAWA_CLASSES {
        let got = aggregate_su3_multiplicity(z1, z2).expect("dominant weight");
        if got != expected {
            return Outcome::new("urakawa", Some(format!("({z1},{z2}): {got} != {expected}")));
        }
    }
    let params = MetricParams::new(int(2), int(2)).expect("positive");
    let spec = build_spectrum(&params, SpectrumQuery::FirstN(8)).expect("valid query");
    for entry in &spec.entries {
        let mut classes: Vec<(u32, u32)> = entry.triples.iter().map(|t| (t.z1, t.z2)).collect();
        classes.dedup();
        let agg: u64 = classes
            .iter()
            .map(|&(a, b)| aggregate_su3_multiplicity(a as i64, b as i64).expect("dominant"))
            .sum();
        if agg != entry.multiplicity {
            return Outcome::new(
                "urakawa",
                Some(format!(
                    "eigenvalue {}: merged multiplicity {} != class sum {agg}",
                    entry.eigenvalue, entry.multiplicity
                )),
            );
        }
    }
    Outcome::new("urakawa", None)
}

/// Sphericity ⟺ n₁ = n₃ for n ≤ depth, and the partition function against
/// direct enumeration.
pub fn sp2_suite(depth: u32) -> Outcome {
    for a0 in -40i64..=40 {
        for a1 in -40i64..=40 {
            let brute = (0..=a1.max(0))
                .filter(|&m2| {
                    let m1 = m2 + a0;
                    let rest = a1 - m1 - m2;
                    m1 >= 0 && rest >= 0 && rest % 2 == 0
                })
                .count() as u64;
            if sp2_partition(a0, a1) != brute {
                return Outcome::new(
                    "sp2",
                    Some(format!(
                        "partition({a0},{a1}) = {} != {brute}",
                        sp2_partition(a0, a1)
                    )),
                );
            }
        }
    }
    for n1 in 0..=depth {
        for n2 in 0..=depth {
            for n3 in 0..=depth {
                if is_sp1prime_spherical(n1, n2, n3) != (n1 == n3) {
                    return Outcome::new("sp2", Some(format!("({n1},{n2},{n3})")));
                }
            }
        }
    }
    Outcome::new("sp2", None)
}

/// Dominance η₁ ≥ f₁ and η₁ > f₂ (where valid) at t₀ = 1/2, continuity of
/// both bounds at their breakpoints, and the partition function feeding
/// the multiplicities.
pub fn estimates_suite() -> Outcome {
    let t0 = ratio(1, 2);
    for k in 1..=50 {
        let t1 = ratio(k, 16);
        let params = MetricParams::new(t0.clone(), t1.clone()).expect("positive");
        let eta = first_eigenvalue(&params);
        let b1 = f1(&t1, 1).expect("positive");
        let b2 = f2(&t1, 1).expect("positive");
        if eta < b1 {
            return Outcome::new("estimates", Some(format!("t1={t1}: eta1={eta} < f1={b1}")));
        }
        if b2.valid && eta <= b2.value {
            return Outcome::new(
                "estimates",
                Some(format!("t1={t1}: eta1={eta} <= f2={}", b2.value)),
            );
        }
    }
    if let Some(msg) = breakpoint_failure().or_else(partition_failure) {
        return Outcome::new("estimates", Some(msg));
    }
    Outcome::new("estimates", None)
}

/// Exact one-sided agreement of f₁ and f₂ at t₁ = 1 and t₁ = 1/(2n+3).
pub fn breakpoint_failure() -> Option<String> {
    for n in 1..=6i64 {
        let one = int(1);
        let f1_flat = |_: &Rational| int(8) * (int(n) + int(1));
        let f1_decay = |t: &Rational| int(8) * (int(n) + int(1) / t);
        if f1_flat(&one) != f1_decay(&one) || f1(&one, n).ok()? != f1_flat(&one) {
            return Some(format!("f1 discontinuous at t1=1, n={n}"));
        }
        let (a, b) = (int(4 * n + 3), int(2 * n + 1));
        let outer = |t: &Rational| &a * (int(2 * n + 4) - int(3) * t) / &b;
        let middle = |t: &Rational| (int(2 * n) * t * t * &a + &a) / (t * &b);
        for bp in [int(1), ratio(1, 2 * n + 3)] {
            if outer(&bp) != middle(&bp) || f2(&bp, n).ok()?.value != outer(&bp) {
                return Some(format!("f2 discontinuous at t1={bp}, n={n}"));
            }
        }
    }
    None
}

/// The 7-term partition function against direct enumeration, |a| ≤ 60.
pub fn partition_failure() -> Option<String> {
    for a1 in -60i64..=60 {
        for a2 in -60i64..=60 {
            let mut brute = 0u64;
            if a1 >= 0 && a1 % 3 == 0 {
                let s = a1 / 3;
                for m2 in 0..=s {
                    let m3 = a2 + (s - m2) + 2 * m2;
                    if m3 >= 0 {
                        brute += 1;
                    }
                }
            }
            if partition(a1, a2) != brute {
                return Some(format!(
                    "partition({a1},{a2}) = {} != {brute}",
                    partition(a1, a2)
                ));
            }
        }
    }
    None
}
