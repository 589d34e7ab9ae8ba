//! Univariate polynomials over the rationals: Euclidean arithmetic,
//! square-free analysis, partial-fraction idempotent interpolation, rational
//! root extraction, and Sturm-sequence real-root isolation.

use crate::scalar::{rat, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients stored low-to-high with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![rat(1)])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly::new(vec![rat(0), rat(1)])
    }

    /// `t - root`.
    pub fn linear(root: &Rat) -> Self {
        Poly::new(vec![-root.clone(), rat(1)])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().recip();
        Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: `self = q·div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(div.coeffs.len()) + 1];
        let dlead = div.leading();
        while !rem.is_zero() && rem.degree() >= div.degree() {
            let shift = rem.degree() - div.degree();
            let f = rem.leading() / &dlead;
            quo[shift] = f.clone();
            // rem -= f * t^shift * div
            let mut coeffs = rem.coeffs;
            for (j, c) in div.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    let v = c * &f;
                    coeffs[shift + j] -= v;
                }
            }
            rem = Poly::new(coeffs);
        }
        (Poly::new(quo), rem)
    }

    pub fn rem(&self, div: &Poly) -> Poly {
        self.div_rem(div).1
    }

    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, u, v)` with `u·self + v·rhs = g`, `g` monic.
    pub fn extended_gcd(&self, rhs: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::scalar::rat_to_f64(c);
        }
        acc
    }

    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Product of the distinct repeated prime factors, when any exist.
    /// Its square always divides `self`, which is what the nilpotent-witness
    /// construction needs.
    pub fn repeated_part(&self) -> Option<Poly> {
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return None;
        }
        // radical of g = g / gcd(g, g')
        let inner = g.gcd(&g.derivative());
        let (rad, rem) = g.div_rem(&inner);
        debug_assert!(rem.is_zero());
        Some(rad.monic())
    }

    /// Square-free part: product of the distinct prime factors.
    pub fn square_free_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        let (q, rem) = self.div_rem(&g);
        debug_assert!(rem.is_zero());
        q.monic()
    }

    /// All rational roots with multiplicity stripped to one occurrence each.
    /// Gives up (returning only the roots found so far) when the integer
    /// divisor enumeration would be unreasonably large.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let mut roots = Vec::new();
        if self.is_zero() || self.is_constant() {
            return roots;
        }
        let mut p = self.monic();
        // factor out t^k first
        if p.coeff(0).is_zero() {
            roots.push(Rat::zero());
            while p.coeff(0).is_zero() && p.degree() > 0 {
                p = Poly::new(p.coeffs[1..].to_vec());
            }
        }
        if p.is_constant() {
            return roots;
        }
        // clear denominators to a primitive integer polynomial
        let mut den = BigInt::one();
        for c in &p.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
        let a0 = ints[0].clone().abs();
        let an = ints.last().unwrap().clone().abs();
        let limit = BigInt::from(1_000_000_000_000u64);
        if a0 > limit || an > limit {
            return roots;
        }
        let num_divs = divisors(&a0);
        let den_divs = divisors(&an);
        let mut seen = std::collections::HashSet::new();
        for nd in &num_divs {
            for dd in &den_divs {
                for sign in [1i64, -1] {
                    let cand = Rat::new(nd * BigInt::from(sign), dd.clone());
                    if seen.insert(cand.clone()) && p.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Sturm chain of `self` (callers pass a square-free polynomial).
    fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        chain
    }

    fn sign_changes(chain: &[Poly], x: &Rat) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v > Rat::zero() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Disjoint isolating intervals `(lo, hi]` for the real roots of a
    /// square-free polynomial, refined until each has width ≤ `width`.
    pub fn isolate_real_roots(&self, width: &Rat) -> Vec<(Rat, Rat)> {
        assert!(self.is_square_free(), "root isolation needs a square-free input");
        if self.degree() == 0 {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        // Cauchy bound
        let lead = self.leading();
        let mut bound = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c / &lead).abs();
            if q > bound {
                bound = q;
            }
        }
        bound += rat(1);
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let count = Self::sign_changes(&chain, &lo).saturating_sub(Self::sign_changes(&chain, &hi));
            if count == 0 {
                continue;
            }
            if count == 1 && (&hi - &lo) <= *width {
                out.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / rat(2);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut divs = Vec::new();
    let mut i = BigInt::one();
    loop {
        let sq = &i * &i;
        if sq > *n {
            break;
        }
        if (n % &i).is_zero() {
            divs.push(i.clone());
            let other = n / &i;
            if other != i {
                divs.push(other);
            }
        }
        i += 1;
    }
    divs.sort();
    divs
}

/// For coprime monic `f`, `g`: the unique `h` of degree `< deg f + deg g`
/// with `h ≡ 1 (mod f)` and `h ≡ 0 (mod g)`.
pub fn crt_one_zero(f: &Poly, g: &Poly) -> Poly {
    let (gc, _u, v) = f.extended_gcd(g);
    assert!(gc.is_constant() && !gc.is_zero(), "crt factors must be coprime");
    // v·g ≡ 1 (mod f), ≡ 0 (mod g)
    v.mul(g).rem(&f.mul(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn div_rem_basics() {
        let a = p(&[-6, 11, -6, 1]); // (t-1)(t-2)(t-3)
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[6, -5, 1]));
    }

    #[test]
    fn gcd_and_square_free() {
        let a = p(&[0, 0, 1]); // t^2
        assert!(!a.is_square_free());
        assert_eq!(a.repeated_part().unwrap(), p(&[0, 1]));
        let b = p(&[-2, 0, 1]); // t^2 - 2
        assert!(b.is_square_free());
        assert!(b.repeated_part().is_none());
        // (t-1)^2 (t+2): repeated part is t-1, square-free part (t-1)(t+2)
        let c = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(c.repeated_part().unwrap(), p(&[-1, 1]));
        assert_eq!(c.square_free_part(), p(&[-1, 1]).mul(&p(&[2, 1])).monic());
    }

    #[test]
    fn crt_idempotent_property() {
        let f = p(&[-2, 1]); // t-2
        let g = p(&[0, 1]).mul(&p(&[-3, 1])); // t(t-3)
        let h = crt_one_zero(&f, &g);
        assert!(h.sub(&Poly::one()).rem(&f).is_zero());
        assert!(h.rem(&g).is_zero());
        // h^2 ≡ h mod fg
        let m = f.mul(&g);
        assert!(h.mul(&h).sub(&h).rem(&m).is_zero());
    }

    #[test]
    fn rational_roots_found() {
        let a = p(&[0, 6, -5, 1]); // t(t-2)(t-3)
        assert_eq!(a.rational_roots(), vec![rat(0), rat(2), rat(3)]);
        let b = Poly::new(vec![ratio(-1, 2), rat(0), rat(1)]); // t^2 - 1/2, irrational
        assert!(b.rational_roots().is_empty());
        let c = Poly::new(vec![ratio(-1, 2), rat(1)]); // t - 1/2
        assert_eq!(c.rational_roots(), vec![ratio(1, 2)]);
    }

    #[test]
    fn sturm_isolates_sqrt2() {
        let b = p(&[-2, 0, 1]);
        let ivs = b.isolate_real_roots(&ratio(1, 1024));
        assert_eq!(ivs.len(), 2);
        let sqrt2 = ratio(1414214, 1000000);
        assert!(ivs[1].0 < sqrt2 && sqrt2 < ivs[1].1.clone() + ratio(1, 1000));
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = p(&[-2, 1]);
        let b = p(&[-3, 1]);
        let (g, u, v) = a.extended_gcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), Poly::one());
    }
}
