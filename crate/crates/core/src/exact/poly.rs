//! Integer polynomial arithmetic for the exact layer: primitive-PRS gcd,
//! Yun square-free decomposition, Sturm chains, and sign evaluation at dyadic
//! rationals. Everything here is exact big-integer work; no floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial, coefficients ascending, no leading zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    pub c: Vec<BigInt>,
}

/// A dyadic rational `num / 2^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Dyadic {
    pub num: BigInt,
    pub exp: u32,
}

impl Dyadic {
    pub fn from_int(v: i64) -> Self {
        Dyadic {
            num: BigInt::from(v),
            exp: 0,
        }
    }

    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let exp = a.exp.max(b.exp) + 1;
        let num = (&a.num << (exp - a.exp)) + (&b.num << (exp - b.exp));
        Dyadic { num, exp }.normalized()
    }

    fn normalized(mut self) -> Dyadic {
        while self.exp > 0 && self.num.is_even() {
            self.num /= 2;
            self.exp -= 1;
        }
        self
    }

    pub fn cmp(&self, other: &Dyadic) -> std::cmp::Ordering {
        let e = self.exp.max(other.exp);
        let a = &self.num << (e - self.exp);
        let b = &other.num << (e - other.exp);
        a.cmp(&b)
    }

    pub fn to_rational(&self) -> num_rational::BigRational {
        num_rational::BigRational::new(self.num.clone(), BigInt::one() << self.exp)
    }
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.len() > 1 && c.last().map_or(false, Zero::is_zero) {
            c.pop();
        }
        if c.is_empty() {
            c.push(BigInt::zero());
        }
        IntPoly { c }
    }

    pub fn zero() -> Self {
        IntPoly {
            c: vec![BigInt::zero()],
        }
    }

    pub fn constant(v: BigInt) -> Self {
        IntPoly { c: vec![v] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.c.last().unwrap()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(num / 2^exp)`, computed as the sign of the integer
    /// `sum c_i num^i 2^{exp (deg - i)}`.
    pub fn sign_at(&self, x: &Dyadic) -> i8 {
        let deg = self.degree();
        let mut acc = BigInt::zero();
        let shift = BigInt::one() << x.exp;
        for i in (0..=deg).rev() {
            acc = acc * &x.num + &self.c[i] * pow_big(&shift, deg - i);
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.degree() == 0 {
            return IntPoly::zero();
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, v)| v * BigInt::from(i))
            .collect();
        IntPoly::new(c)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.c.iter().map(|v| -v).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.c.iter().map(|v| v * k).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.c.len().max(other.c.len());
        let mut c = vec![BigInt::zero(); len];
        for (i, v) in self.c.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.c.iter().enumerate() {
            c[i] -= v;
        }
        IntPoly::new(c)
    }

    /// `x^shift * self`.
    pub fn shift_up(&self, shift: usize) -> IntPoly {
        let mut c = vec![BigInt::zero(); shift];
        c.extend(self.c.iter().cloned());
        IntPoly::new(c)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for v in &self.c {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.c.iter().map(|v| v / &g).collect())
    }

    /// Divides out the content only, keeping the sign of every coefficient.
    pub fn primitive_keep_sign(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly::new(self.c.iter().map(|v| v / &g).collect())
    }

    /// Exact division, `None` if `other` does not divide `self` over the
    /// integers.
    pub fn exact_div(&self, other: &IntPoly) -> Option<IntPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.c.clone();
        let dq = self.degree() - other.degree();
        let mut quot = vec![BigInt::zero(); dq + 1];
        let lo = other.leading();
        for k in (0..=dq).rev() {
            let top = rem[k + other.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lo);
            if !r.is_zero() {
                return None;
            }
            for (i, oc) in other.c.iter().enumerate() {
                let delta = oc * &q;
                rem[k + i] -= delta;
            }
            quot[k] = q;
        }
        if rem.iter().any(|v| !v.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Pseudo-remainder scaled so the applied multiplier is positive: returns
    /// `s * rem(a, b)` for some `s > 0`.
    fn pseudo_rem_positive(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree();
        let lb = b.leading().clone();
        let lb_abs = lb.abs();
        let lb_sign = BigInt::from(if lb.is_negative() { -1 } else { 1 });
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= db {
            let shift = r.degree() - db;
            let lr = r.leading().clone();
            r = r.scale(&lb_abs).sub(&b.shift_up(shift).scale(&(lr * &lb_sign)));
        }
        r
    }

    /// Polynomial gcd via the primitive pseudo-remainder sequence, returned
    /// primitive with positive leading coefficient.
    pub fn gcd_poly(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem_positive(&b);
            if r.is_zero() {
                return b.primitive();
            }
            if r.degree() == 0 {
                return IntPoly::constant(BigInt::one());
            }
            a = b;
            b = r.primitive();
        }
    }

    /// Yun decomposition: returns `(f_i, i)` with `self ~ prod f_i^i`, each
    /// `f_i` square-free, primitive, positive leading coefficient.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let f = self.primitive();
        if f.degree() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd_poly(&df);
        if a0.degree() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut w = f.exact_div(&a0).expect("gcd divides");
        let mut y = df.exact_div(&a0).expect("gcd divides derivative");
        let mut i = 1usize;
        loop {
            let z = y.sub(&w.derivative());
            if z.is_zero() {
                if w.degree() > 0 {
                    out.push((w.primitive(), i));
                }
                break;
            }
            let g = w.gcd_poly(&z);
            if g.degree() > 0 {
                out.push((g.clone(), i));
            }
            w = w.exact_div(&g).expect("square-free factor divides");
            y = z.exact_div(&g).expect("square-free factor divides");
            i += 1;
            if w.degree() == 0 {
                break;
            }
        }
        out
    }

    /// Integer roots with |r| <= bound, found by direct evaluation. Intended
    /// for polynomials whose real roots are known to be bounded.
    pub fn integer_roots_within(&self, bound: i64) -> Vec<i64> {
        let mut out = Vec::new();
        for r in -bound..=bound {
            if self.eval_int(&BigInt::from(r)).is_zero() {
                out.push(r);
            }
        }
        out
    }

    /// Cauchy root bound: all real roots lie strictly inside
    /// `1 + max |c_i| / |lc|`, rounded up to an integer.
    pub fn cauchy_bound(&self) -> BigInt {
        let lc = self.leading().abs();
        let mut max = BigInt::zero();
        for v in &self.c[..self.degree()] {
            let a = v.abs();
            if a > max {
                max = a;
            }
        }
        // ceil(max/lc) + 1
        let q = (&max + &lc - BigInt::one()) / &lc;
        q + BigInt::one()
    }

    /// True iff only even powers carry nonzero coefficients.
    pub fn is_even_polynomial(&self) -> bool {
        self.c.iter().enumerate().all(|(i, v)| i % 2 == 0 || v.is_zero())
    }

    /// For an even polynomial, the polynomial in `y = x^2`.
    pub fn even_part_in_y(&self) -> IntPoly {
        debug_assert!(self.is_even_polynomial());
        IntPoly::new(self.c.iter().step_by(2).cloned().collect())
    }
}

pub(crate) fn pow_big(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub(crate) fn sign_of(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

/// Sturm chain of a square-free polynomial: `s0 = p`, `s1 = p'`, and each
/// following entry a positively-scaled negated remainder, content-reduced.
pub(crate) struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> SturmChain {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[k - 1].degree() == 0 {
                break;
            }
            let r = chain[k - 2].pseudo_rem_positive(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive_keep_sign());
        }
        SturmChain { chain }
    }

    /// Number of sign changes at `x`; zeros are skipped.
    pub fn variations_at(&self, x: &Dyadic) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of roots in the open interval `(a, b)`, valid when neither
    /// endpoint is a root of the base polynomial.
    pub fn roots_between(&self, a: &Dyadic, b: &Dyadic) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}
