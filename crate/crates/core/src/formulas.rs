//! Closed-form evaluators for the product connectivity and diagnosability
//! formulas, in exact integer arithmetic.
//!
//! Evaluators are total over k₁, k₂ ≥ 2 and never touch floating point;
//! hypothesis guards are reported separately so callers can probe values
//! outside the proven range while the harness enforces guards strictly.

use crate::invariants::GirthValue;

/// Smallest r with r·r ≥ x (integer ceil of the square root).
#[must_use]
pub fn ceil_sqrt(x: usize) -> usize {
    let mut r = 0usize;
    while r * r < x {
        r += 1;
    }
    r
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn checked(v: i64) -> usize {
    usize::try_from(v).expect("formula value must be non-negative")
}

/// κ₀(G₁⊠G₂) = k₁k₂+k₁+k₂ (the minimum degree of the strong product).
#[must_use]
pub fn kappa0_strong(k1: usize, k2: usize) -> usize {
    k1 * k2 + k1 + k2
}

/// κ₁(G₁⊠G₂) = min{2k₁k₂+2k₁−2, 2k₁k₂+2k₂−2}.
#[must_use]
pub fn kappa1_strong(k1: usize, k2: usize) -> usize {
    let (k1, k2) = (k1 as i64, k2 as i64);
    checked((2 * k1 * k2 + 2 * k1 - 2).min(2 * k1 * k2 + 2 * k2 - 2))
}

/// κ₂(G₁⊠G₂) = min{3k₁k₂+3k₁−k₂−4, 3k₁k₂−k₁+3k₂−4}.
#[must_use]
pub fn kappa2_strong(k1: usize, k2: usize) -> usize {
    let (k1, k2) = (k1 as i64, k2 as i64);
    checked((3 * k1 * k2 + 3 * k1 - k2 - 4).min(3 * k1 * k2 - k1 + 3 * k2 - 4))
}

/// κ₃(G₁⊠G₂) = min{4k₁k₂+4k₁−2k₂−6, 4k₁k₂−2k₁+4k₂−6, 4k₁k₂−4}.
#[must_use]
pub fn kappa3_strong(k1: usize, k2: usize) -> usize {
    let (k1, k2) = (k1 as i64, k2 as i64);
    let t1 = 4 * k1 * k2 + 4 * k1 - 2 * k2 - 6;
    let t2 = 4 * k1 * k2 - 2 * k1 + 4 * k2 - 6;
    let t3 = 4 * k1 * k2 - 4;
    checked(t1.min(t2).min(t3))
}

/// The proven κ_g value for g ≤ 3, dispatching to the per-g expressions.
#[must_use]
pub fn kappa_g_strong(g: usize, k1: usize, k2: usize) -> Option<usize> {
    match g {
        0 => Some(kappa0_strong(k1, k2)),
        1 => Some(kappa1_strong(k1, k2)),
        2 => Some(kappa2_strong(k1, k2)),
        3 => Some(kappa3_strong(k1, k2)),
        _ => None,
    }
}

/// M₁(g,k₁,k₂) = (g+1)(k₁k₂−k₁−k₂) + 2(g+1)(min−1) + 2(max−1) + 4.
#[must_use]
pub fn m1_formula(g: usize, k1: usize, k2: usize) -> usize {
    let (gp, lo, hi) = ((g + 1) as i64, k1.min(k2) as i64, k1.max(k2) as i64);
    checked(gp * (lo * hi - lo - hi) + 2 * gp * (lo - 1) + 2 * (hi - 1) + 4)
}

/// M₂(g,k₁,k₂) = (g+1)(k₁k₂−k₁−k₂) + 2⌈√(g+1)⌉(min−1)
/// + 2⌈(g+1)/⌈√(g+1)⌉⌉(max−1) + 4.
#[must_use]
pub fn m2_formula(g: usize, k1: usize, k2: usize) -> usize {
    let s = ceil_sqrt(g + 1);
    let (gp, lo, hi) = ((g + 1) as i64, k1.min(k2) as i64, k1.max(k2) as i64);
    checked(
        gp * (lo * hi - lo - hi)
            + 2 * (s as i64) * (lo - 1)
            + 2 * (ceil_div(g + 1, s) as i64) * (hi - 1)
            + 4,
    )
}

/// M(g,k₁,k₂) = min{M₁, M₂}; the unified closed form for κ_g(G₁⊠G₂).
#[must_use]
pub fn m_formula(g: usize, k1: usize, k2: usize) -> usize {
    m1_formula(g, k1, k2).min(m2_formula(g, k1, k2))
}

/// κ_g(C_m⊠C_n) = min{2m, 2n, 2⌈2√(g+1)⌉+4}, valid under
/// [`cycle_product_hypothesis_holds`].
#[must_use]
pub fn cycle_product_formula(g: usize, m: usize, n: usize) -> usize {
    // ⌈2√(g+1)⌉ = ⌈√(4(g+1))⌉ exactly, since 2√x = √(4x).
    let core = 2 * ceil_sqrt(4 * (g + 1)) + 4;
    (2 * m).min(2 * n).min(core)
}

/// Range condition for the torus formula: g ≤ max{n⌊(m−2)/2⌋−1, m⌊(n−1)/2⌋−1}.
#[must_use]
pub fn cycle_product_hypothesis_holds(g: usize, m: usize, n: usize) -> bool {
    let a = (n * ((m.saturating_sub(2)) / 2)).saturating_sub(1);
    let b = (m * ((n.saturating_sub(1)) / 2)).saturating_sub(1);
    g <= a.max(b)
}

/// κ₁(G₁□G₂) = 2k₁+2k₂−2 (girth ≥ 4 factors).
#[must_use]
pub fn cartesian_kappa1(k1: usize, k2: usize) -> usize {
    2 * k1 + 2 * k2 - 2
}

/// κ₂(G₁□G₂) = 3k₁+3k₂−5 (girth ≥ 5 factors).
#[must_use]
pub fn cartesian_kappa2(k1: usize, k2: usize) -> usize {
    3 * k1 + 3 * k2 - 5
}

/// g-extra conditional fault-diagnosability t̃ = M(g,k₁,k₂)+g.
#[must_use]
pub fn diagnosability_formula(g: usize, k1: usize, k2: usize) -> usize {
    m_formula(g, k1, k2) + g
}

/// Inputs for a formula evaluation plus the data needed for guard checks.
#[derive(Clone, Debug)]
pub struct FormulaParams {
    pub g: usize,
    pub k1: usize,
    pub k2: usize,
    pub girth1: GirthValue,
    pub girth2: GirthValue,
}

impl FormulaParams {
    /// Hypothesis problems, empty when the κ_g expressions are proven for
    /// these parameters. Callers decide whether these are warnings or
    /// hard failures.
    #[must_use]
    pub fn guard_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.k1 < 2 {
            out.push(format!("k1 = {} but the formulas require k1 >= 2", self.k1));
        }
        if self.k2 < 2 {
            out.push(format!("k2 = {} but the formulas require k2 >= 2", self.k2));
        }
        if self.g > 3 {
            out.push(format!(
                "g = {} but the formulas are proven only for g <= 3",
                self.g
            ));
        }
        let need = self.g + 4;
        if !self.girth1.at_least(need) {
            out.push(format!(
                "girth(G1) = {} but g = {} requires girth >= {need}",
                self.girth1, self.g
            ));
        }
        if !self.girth2.at_least(need) {
            out.push(format!(
                "girth(G2) = {} but g = {} requires girth >= {need}",
                self.girth2, self.g
            ));
        }
        out
    }

    #[must_use]
    pub fn guards_hold(&self) -> bool {
        self.guard_violations().is_empty()
    }
}
