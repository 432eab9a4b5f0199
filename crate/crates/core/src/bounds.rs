//! Explicit brittleness thresholds ℓ(k, n) for the four families.
//!
//! Above ℓ(k, n) a graph is guaranteed to contain the family's obstruction
//! with `n` copies. The vertex, edge and matching recursions are closed
//! formulas. The rank recursion goes through a multicolour Ramsey number
//! R(n; c) and the unavoidable-bipartite-pattern function f(n), neither of
//! which has a closed form; both are supplied as rules in [`BoundParams`],
//! and the result is an upper bound only as good as those rules.
//!
//! All arithmetic is exact. Results larger than [`MAX_BOUND_BITS`] bits are
//! reported as [`Error::ResourceLimit`] instead of being materialised.

use alloc::format;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};

/// Largest bound, in bits, that will be materialised.
pub const MAX_BOUND_BITS: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFamily {
    Vertex,
    Edge,
    Matching,
    Rank,
}

impl core::str::FromStr for BoundFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" => Ok(BoundFamily::Vertex),
            "edge" => Ok(BoundFamily::Edge),
            "matching" => Ok(BoundFamily::Matching),
            "rank" => Ok(BoundFamily::Rank),
            other => Err(invalid(format!("unknown bound family {other}"))),
        }
    }
}

/// Upper bound for R(clique; colors).
pub type RamseyRule = fn(clique: &BigUint, colors: &BigUint) -> Result<BigUint>;
/// Upper bound for the unavoidable-bipartite-pattern function f(n).
pub type BipartiteRule = fn(n: &BigUint) -> Result<BigUint>;

#[derive(Clone, Copy, Debug)]
pub struct BoundParams {
    pub k: u64,
    pub n: u64,
    pub ramsey: Option<RamseyRule>,
    pub bipartite: Option<BipartiteRule>,
}

impl BoundParams {
    /// `k`, `n` with the default rules [`ramsey_pigeonhole`] and
    /// [`bipartite_placeholder`].
    pub fn new(k: u64, n: u64) -> Self {
        BoundParams {
            k,
            n,
            ramsey: Some(ramsey_pigeonhole),
            bipartite: Some(bipartite_placeholder),
        }
    }
}

/// `c^(c(n-1)) + 1`, the multicolour pigeonhole bound on R(n; c).
pub fn ramsey_pigeonhole(clique: &BigUint, colors: &BigUint) -> Result<BigUint> {
    let exp = colors * (clique.clone().max(BigUint::one()) - 1u32);
    Ok(checked_pow(colors, &exp)? + 1u32)
}

/// `2^(2^(2n))`. Not a proven value of f(n); a stand-in so the rank
/// recursion can be evaluated. Replace it for meaningful numbers.
pub fn bipartite_placeholder(n: &BigUint) -> Result<BigUint> {
    let inner = checked_pow(&BigUint::from(2u32), &(n * 2u32))?;
    checked_pow(&BigUint::from(2u32), &inner)
}

/// `base^exp`, refusing results beyond [`MAX_BOUND_BITS`].
pub fn checked_pow(base: &BigUint, exp: &BigUint) -> Result<BigUint> {
    if exp.is_zero() || base.is_one() {
        return Ok(BigUint::one());
    }
    if base.is_zero() {
        return Ok(BigUint::zero());
    }
    let too_big = || Error::ResourceLimit {
        what: "bound bit length",
        size: usize::MAX,
        limit: MAX_BOUND_BITS as usize,
    };
    let e = exp.to_u64().ok_or_else(too_big)?;
    let bits = (base.bits() - 1).max(1);
    if bits.saturating_mul(e) > MAX_BOUND_BITS {
        return Err(too_big());
    }
    guard(num_traits::pow(base.clone(), e as usize))
}

fn guard(x: BigUint) -> Result<BigUint> {
    if x.bits() > MAX_BOUND_BITS {
        Err(Error::ResourceLimit {
            what: "bound bit length",
            size: x.bits() as usize,
            limit: MAX_BOUND_BITS as usize,
        })
    } else {
        Ok(x)
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn ceil_half(x: BigUint) -> BigUint {
    (x + 1u32) >> 1
}

fn binomial(n: u64, r: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// ℓ(k, n) for the given family.
pub fn bound_ell(family: BoundFamily, p: &BoundParams) -> Result<BigUint> {
    if p.k == 0 || p.n == 0 {
        return Err(invalid("bounds need k, n >= 1"));
    }
    let n = big(p.n);
    match family {
        BoundFamily::Vertex => vertex_ell(p.k, &n),
        BoundFamily::Edge => edge_ell(p.k, &n),
        BoundFamily::Matching => {
            let k = big(p.k);
            guard(checked_pow(&(&k + 1u32), &k)? * (n - 1u32))
        }
        BoundFamily::Rank => {
            let rules = RankRules {
                ramsey: p.ramsey.ok_or_else(|| invalid("rank bound needs a Ramsey rule"))?,
                f: p
                    .bipartite
                    .ok_or_else(|| invalid("rank bound needs a bipartite-pattern rule"))?,
            };
            rules.ell(p.k, &n)
        }
    }
}

/// ℓ(1,n) = 256n⁴; ℓ(k,n) = ℓ(k-1, 4(k+1)²n² + c) + c with
/// c = k²·k!·C((2k+1)k, 2k)^k·(n-1)^k.
fn vertex_ell(k: u64, n: &BigUint) -> Result<BigUint> {
    if k == 1 {
        return guard(num_traits::pow(n.clone(), 4) * 256u32);
    }
    let c = guard(
        big(k * k)
            * factorial(k)
            * checked_pow(&binomial((2 * k + 1) * k, 2 * k), &big(k))?
            * checked_pow(&(n - 1u32), &big(k))?,
    )?;
    let arg = guard(big(4 * (k + 1) * (k + 1)) * n * n + &c)?;
    guard(vertex_ell(k - 1, &arg)? + c)
}

/// ℓ(1,n) = n(n-1); ℓ(k,n) = ℓ(k-1, 4k(n-1)² + 1).
fn edge_ell(k: u64, n: &BigUint) -> Result<BigUint> {
    if k == 1 {
        return guard(n * (n - 1u32));
    }
    let m = n - 1u32;
    let arg = guard(big(4 * k) * &m * &m + 1u32)?;
    edge_ell(k - 1, &arg)
}

struct RankRules {
    ramsey: RamseyRule,
    f: BipartiteRule,
}

impl RankRules {
    fn r(&self, clique: &BigUint, colors: &BigUint) -> Result<BigUint> {
        guard((self.ramsey)(clique, colors)?)
    }

    fn f(&self, n: &BigUint) -> Result<BigUint> {
        guard((self.f)(n)?)
    }

    /// f₁(k,n) = 2^(k-1)·(R(max(⌈((k+2)n-1)/2⌉+1, n+3); 4^(k-1)) - 1) + 1.
    fn f1(&self, k: u64, n: &BigUint) -> Result<BigUint> {
        let half = ceil_half(big(k + 2) * n - 1u32);
        let clique = (half + 1u32).max(n + 3u32);
        let colors = checked_pow(&big(2), &big(2 * (k - 1)))?;
        let r = self.r(&clique, &colors)?;
        guard(checked_pow(&big(2), &big(k - 1))? * (r - 1u32) + 1u32)
    }

    /// N(k,n) = f(n₁) with n₁ = R(n₂; 2), n₂ from n₃ = max(f₁, f₂, ⌈((k+2)n-1)/2⌉).
    fn big_n(&self, k: u64, n: &BigUint) -> Result<BigUint> {
        let n2 = if k > 1 {
            let f1 = self.f1(k, n)?;
            let f2 = &f1 + 2u32;
            let n3 = f1.max(f2).max(ceil_half(big(k + 2) * n - 1u32));
            big(k - 1) * n3 + 1u32
        } else {
            (n + 2u32).max(ceil_half(n * 3u32 + 1u32))
        };
        let n1 = self.r(&n2, &big(2))?;
        self.f(&n1)
    }

    fn ell(&self, k: u64, n: &BigUint) -> Result<BigUint> {
        if k == 1 {
            let l2 = (n + 2u32).max(ceil_half(n * 3u32 + 1u32));
            let l1 = self.r(&l2, &big(4))?;
            return guard(self.f(&l1)? - 1u32);
        }
        let big_n = self.big_n(k, n)?;
        let l3 = guard(
            checked_pow(&big(2), &(big(k) * (big_n - 1u32)))? * k + 1u32,
        )?;
        let l2 = (big(k + 2) * n).max(
            checked_pow(&big(2), &big(k * (k + 1) / 2))? * (n - 1u32) + 2u32,
        );
        let l1 = self.r(&l2, &checked_pow(&big(2), &big(k + 1))?)?;
        guard(self.ell(k - 1, &l3)? + big((k + 1) * (k + 1)) * (l1 - 1u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        let v = bound_ell(BoundFamily::Vertex, &BoundParams::new(1, 2)).unwrap();
        assert_eq!(v, big(4096));
        let e = bound_ell(BoundFamily::Edge, &BoundParams::new(1, 3)).unwrap();
        assert_eq!(e, big(6));
        let m = bound_ell(BoundFamily::Matching, &BoundParams::new(2, 3)).unwrap();
        assert_eq!(m, big(18));
    }

    #[test]
    fn recursive_examples() {
        // ℓ(2,2) for the edge family: ℓ(1, 4·2·1 + 1) = 9·8
        let e = bound_ell(BoundFamily::Edge, &BoundParams::new(2, 2)).unwrap();
        assert_eq!(e, big(72));
        // vertex k = 2, n = 2: c = 4·2·C(10,4)²·1 = 352800,
        // ℓ = 256·(144 + c)⁴ + c
        let v = bound_ell(BoundFamily::Vertex, &BoundParams::new(2, 2)).unwrap();
        let arg = big(352_944);
        assert_eq!(v, num_traits::pow(arg, 4) * 256u32 + 352_800u32);
    }

    fn ramsey_identity(clique: &BigUint, _colors: &BigUint) -> Result<BigUint> {
        Ok(clique.clone())
    }

    fn f_identity(n: &BigUint) -> Result<BigUint> {
        Ok(n.clone())
    }

    #[test]
    fn rank_recursion_with_plugged_rules() {
        let p = BoundParams {
            k: 1,
            n: 2,
            ramsey: Some(ramsey_identity),
            bipartite: Some(f_identity),
        };
        // ℓ₂ = max(4, 4) = 4, ℓ₁ = 4, ℓ = 3
        assert_eq!(bound_ell(BoundFamily::Rank, &p).unwrap(), big(3));
        // k = 2: f₁ = 9, n₃ = 11, n₂ = 12, N = 12, ℓ₃ = 2·2²²+1,
        // ℓ₂ = 10, ℓ₁ = 10, ℓ(1, ℓ₃) = 12582913, plus 9·9
        let p2 = BoundParams { k: 2, ..p };
        assert_eq!(bound_ell(BoundFamily::Rank, &p2).unwrap(), big(12_582_994));
    }

    #[test]
    fn rank_defaults_are_too_large_and_rules_are_required() {
        assert!(matches!(
            bound_ell(BoundFamily::Rank, &BoundParams::new(1, 1)),
            Err(Error::ResourceLimit { .. })
        ));
        let mut p = BoundParams::new(1, 1);
        p.ramsey = None;
        assert!(matches!(
            bound_ell(BoundFamily::Rank, &p),
            Err(Error::InvalidArgument(_))
        ));
        assert!(bound_ell(BoundFamily::Edge, &BoundParams::new(0, 3)).is_err());
    }

    #[test]
    fn pigeonhole_small_values() {
        // R(3;2) <= 2^4 + 1
        assert_eq!(ramsey_pigeonhole(&big(3), &big(2)).unwrap(), big(17));
        assert_eq!(bipartite_placeholder(&big(1)).unwrap(), big(16));
    }
}
