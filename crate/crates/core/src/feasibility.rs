//! Existence answers for cyclic `C_ℓ`-factorizations of `K_{m×n}`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Exists {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Exists {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exists::Yes => "yes",
            Exists::No => "no",
            Exists::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub rule_id: String,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityVerdict {
    pub exists: Exists,
    pub reasons: Vec<Reason>,
}

impl FeasibilityVerdict {
    fn new(exists: Exists, rule_id: &str, citation: impl Into<String>) -> Self {
        FeasibilityVerdict {
            exists,
            reasons: vec![Reason {
                rule_id: rule_id.into(),
                citation: citation.into(),
            }],
        }
    }

    pub fn has_rule(&self, rule_id: &str) -> bool {
        self.reasons.iter().any(|r| r.rule_id == rule_id)
    }
}

impl fmt::Display for FeasibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let why: Vec<&str> = self.reasons.iter().map(|r| r.citation.as_str()).collect();
        write!(f, "{}: {}", self.exists, why.join("; "))
    }
}

/// `|x|_2`, the exponent of the largest power of 2 dividing `x` (`x > 0`).
pub fn two_adic(x: usize) -> u32 {
    assert!(x > 0, "2-adic valuation of 0");
    x.trailing_zeros()
}

/// `Some((p, α))` when `m = p^α` for a prime `p` and `α ≥ 1`.
pub fn is_prime_power(m: usize) -> Option<(usize, u32)> {
    if m < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !m.is_multiple_of(p) {
        p = m;
    }
    let mut rest = m;
    let mut alpha = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        alpha += 1;
    }
    (rest == 1).then_some((p, alpha))
}

fn power_text(m: usize) -> String {
    match is_prime_power(m) {
        Some((p, 1)) => format!("m = {p}"),
        Some((p, a)) => format!("m = {p}^{a}"),
        None => format!("m = {m}"),
    }
}

/// Cyclic `C_4`-factorizations.
pub fn c4_exists(m: usize, n: usize) -> FeasibilityVerdict {
    use Exists::*;
    if m.is_multiple_of(2) && n.is_multiple_of(2) {
        return FeasibilityVerdict::new(
            Yes,
            "c4-both-even",
            "exists whenever m and n are both even",
        );
    }
    if n % 2 == 1 {
        return FeasibilityVerdict::new(No, "c4-n-odd", "n must be even");
    }
    // m odd, n even
    if !n.is_multiple_of(4) {
        return FeasibilityVerdict::new(
            No,
            "c4-odd-m-n-2mod4",
            "for odd m, n must be divisible by 4",
        );
    }
    if n == 4 && is_prime_power(m).is_some() {
        return FeasibilityVerdict::new(
            No,
            "c4-prime-power-n4",
            format!("prime-power exclusion for n = 4 ({})", power_text(m)),
        );
    }
    FeasibilityVerdict::new(
        Yes,
        "c4-odd-m-n-0mod4",
        "exists for odd m when 4 divides n and (m, n) is not (prime power, 4)",
    )
}

/// Cyclic hamiltonian 2-factorizations (`ℓ = mn`).
pub fn ham_exists(m: usize, n: usize) -> FeasibilityVerdict {
    use Exists::*;
    if (m * n) % 2 == 1 {
        return FeasibilityVerdict::new(
            Unknown,
            "ham-odd-order",
            "odd order is outside the even-order classification",
        );
    }
    if n % 2 == 1 {
        return FeasibilityVerdict::new(No, "ham-n-odd", "n must be even");
    }
    if n % 4 == 2 && !matches!(m % 4, 1 | 2) {
        return FeasibilityVerdict::new(
            No,
            "ham-n2mod4-m-0or3mod4",
            "for n ≡ 2 (mod 4), m must be ≡ 1 or 2 (mod 4)",
        );
    }
    if n == 2 {
        if let Some((p, _)) = is_prime_power(m) {
            if p % 2 == 1 {
                return FeasibilityVerdict::new(
                    No,
                    "ham-n2-odd-prime-power",
                    format!(
                        "for n = 2, m must not be an odd prime power ({})",
                        power_text(m)
                    ),
                );
            }
        }
    }
    FeasibilityVerdict::new(
        Yes,
        "ham-conditions-hold",
        "n even, congruence and prime-power conditions hold",
    )
}

/// Necessary conditions for a cyclic `ℓ`-cycle system; never answers yes.
pub fn cyclic_system_obstruction(m: usize, n: usize, ell: usize) -> FeasibilityVerdict {
    use Exists::*;
    if ell < 3 {
        return FeasibilityVerdict::new(No, "trivial-length", "cycles need length at least 3");
    }
    if !(m * n).is_multiple_of(ell) {
        return FeasibilityVerdict::new(No, "trivial-divisibility", "ℓ must divide mn");
    }
    if !((m - 1) * n).is_multiple_of(2) {
        return FeasibilityVerdict::new(No, "trivial-degree", "the degree (m−1)n must be even");
    }
    if !n.is_multiple_of(2) || !ell.is_multiple_of(2) {
        return FeasibilityVerdict::new(
            Unknown,
            "obstruction-out-of-range",
            "the valuation conditions need n and ℓ even",
        );
    }
    let (l2, n2) = (two_adic(ell), two_adic(n));
    let fired = match m % 4 {
        0 => (l2 == two_adic(m) + 2 * n2 - 1).then_some("obstruction-m-0mod4"),
        1 => (l2 == two_adic(m - 1) + 2 * n2 - 1).then_some("obstruction-m-1mod4"),
        _ if n % 4 == 2 => (!ell.is_multiple_of(4)).then_some("obstruction-m-2or3mod4-n-2mod4"),
        _ => (l2 == 2 * n2).then_some("obstruction-m-2or3mod4-n-0mod4"),
    };
    match fired {
        Some(rule) => FeasibilityVerdict::new(
            No,
            rule,
            "2-adic valuation obstruction to cyclic ℓ-cycle systems",
        ),
        None => FeasibilityVerdict::new(
            Unknown,
            "obstruction-none",
            "no necessary condition is violated",
        ),
    }
}

/// Dispatches to the decisive answers for `ℓ ∈ {4, mn}` and to the
/// necessary conditions otherwise.
pub fn feasible(m: usize, n: usize, ell: usize) -> FeasibilityVerdict {
    if ell == 4 {
        c4_exists(m, n)
    } else if ell == m * n {
        ham_exists(m, n)
    } else {
        cyclic_system_obstruction(m, n, ell)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(is_prime_power(9), Some((3, 2)));
        assert_eq!(is_prime_power(15), None);
        assert_eq!(is_prime_power(143), None);
        assert_eq!(is_prime_power(2), Some((2, 1)));
        assert_eq!(is_prime_power(97), Some((97, 1)));
        assert_eq!(is_prime_power(1), None);
    }

    #[test]
    fn c4_table() {
        assert_eq!(c4_exists(16, 8).exists, Exists::Yes);
        assert!(c4_exists(16, 8).has_rule("c4-both-even"));
        let v = c4_exists(9, 4);
        assert_eq!(v.exists, Exists::No);
        assert!(v.has_rule("c4-prime-power-n4"));
        assert!(v.to_string().contains("3^2"));
        assert_eq!(c4_exists(15, 4).exists, Exists::Yes);
        assert_eq!(c4_exists(3, 6).exists, Exists::No);
        assert_eq!(c4_exists(2, 3).exists, Exists::No);
    }

    #[test]
    fn ham_table() {
        assert_eq!(ham_exists(5, 18).exists, Exists::Yes);
        assert!(ham_exists(4, 6).has_rule("ham-n2mod4-m-0or3mod4"));
        assert!(ham_exists(7, 2).has_rule("ham-n2mod4-m-0or3mod4"));
        assert!(ham_exists(9, 2).has_rule("ham-n2-odd-prime-power"));
        assert_eq!(ham_exists(6, 2).exists, Exists::Yes);
        assert_eq!(ham_exists(3, 3).exists, Exists::Unknown);
    }

    #[test]
    fn obstruction_cases() {
        assert!(cyclic_system_obstruction(4, 2, 8).has_rule("obstruction-m-0mod4"));
        assert!(cyclic_system_obstruction(3, 2, 6).has_rule("obstruction-m-2or3mod4-n-2mod4"));
        assert_eq!(cyclic_system_obstruction(2, 4, 4).exists, Exists::Unknown);
        assert!(cyclic_system_obstruction(3, 4, 5).has_rule("trivial-divisibility"));
    }
}
