//! Exact elements of the cyclotomic fields `Q(ζ_N)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rat;

type Poly = Vec<Rat>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder by a monic divisor.
fn poly_divrem(a: &[Rat], monic: &[Rat]) -> (Poly, Poly) {
    let dn = monic.len() - 1;
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= dn {
        return (Vec::new(), r);
    }
    let mut q = vec![Rat::zero(); r.len() - dn];
    for i in (dn..r.len()).rev() {
        let c = r[i].clone();
        if c.is_zero() {
            continue;
        }
        q[i - dn] = c.clone();
        for (j, m) in monic.iter().enumerate() {
            r[i - dn + j] -= &c * m;
        }
    }
    r.truncate(dn);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<u32, Rc<Poly>>> = RefCell::new(HashMap::new());
}

/// The `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic(n: u32) -> Rc<Poly> {
    assert!(n > 0, "cyclotomic order must be positive");
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    let mut p = vec![Rat::zero(); n as usize + 1];
    p[0] = -Rat::one();
    p[n as usize] = Rat::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = poly_divrem(&p, &cyclotomic(d));
        debug_assert!(r.is_empty());
        p = q;
    }
    let p = Rc::new(p);
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

/// An element `Σ c_i ζ_N^i` of `Q(ζ_N)`, kept reduced modulo the `N`-th
/// cyclotomic polynomial. Rational values always have `N = 1`.
#[derive(Clone, Debug)]
pub struct Scalar {
    order: u32,
    coeffs: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            order: 1,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut coeffs = vec![r];
        trim(&mut coeffs);
        Scalar { order: 1, coeffs }
    }

    pub fn from_int(x: i64) -> Self {
        Self::from_rat(Rat::from_integer(x.into()))
    }

    /// `ζ_n^k` with `ζ_n = exp(2πi/n)`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n > 0, "root of unity order must be positive");
        let e = k.mod_floor(&(n as i64)) as usize;
        let mut coeffs = vec![Rat::zero(); e + 1];
        coeffs[e] = Rat::one();
        Self::reduced(n, coeffs)
    }

    /// Builds from coefficients of powers of `ζ_n`.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rat>) -> Self {
        assert!(n > 0, "cyclotomic order must be positive");
        Self::reduced(n, coeffs)
    }

    fn reduced(order: u32, coeffs: Poly) -> Self {
        let (_, mut r) = poly_divrem(&coeffs, &cyclotomic(order));
        trim(&mut r);
        if r.len() <= 1 {
            return Scalar {
                order: 1,
                coeffs: r,
            };
        }
        Scalar { order, coeffs: r }
    }

    /// The order `N` of the smallest field this value was built in.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of `1, ζ_N, ζ_N^2, …` in reduced form.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 if self.order == 1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn lifted(&self, to: u32) -> Poly {
        let step = (to / self.order) as usize;
        if step == 1 {
            return self.coeffs.clone();
        }
        let mut out = vec![Rat::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * step] = c.clone();
        }
        out
    }

    fn common(&self, other: &Scalar) -> (u32, Poly, Poly) {
        let l = self.order.lcm(&other.order);
        (l, self.lifted(l), other.lifted(l))
    }

    pub fn scale(&self, r: &Rat) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        let (l, a, b) = self.common(other);
        Scalar::reduced(l, a).coeffs == Scalar::reduced(l, b).coeffs
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.order == 1 && rhs.order == 1 {
            let v = self.coeffs.first().cloned().unwrap_or_else(Rat::zero)
                + rhs.coeffs.first().cloned().unwrap_or_else(Rat::zero);
            return Scalar::from_rat(v);
        }
        let (l, mut a, b) = self.common(rhs);
        if a.len() < b.len() {
            a.resize(b.len(), Rat::zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Scalar::reduced(l, a)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.order == 1 && rhs.order == 1 {
            return match (self.coeffs.first(), rhs.coeffs.first()) {
                (Some(a), Some(b)) => Scalar::from_rat(a * b),
                _ => Scalar::zero(),
            };
        }
        let (l, a, b) = self.common(rhs);
        Scalar::reduced(l, poly_mul(&a, &b))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::from_rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*z{}", self.order),
                _ => format!("{c}*z{}^{i}", self.order),
            })
            .collect();
        write!(f, "({})", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_ints = |n| {
            cyclotomic(n)
                .iter()
                .map(|c| c.to_integer().try_into().unwrap())
                .collect::<Vec<i64>>()
        };
        assert_eq!(as_ints(1), vec![-1, 1]);
        assert_eq!(as_ints(3), vec![1, 1, 1]);
        assert_eq!(as_ints(4), vec![1, 0, 1]);
        assert_eq!(as_ints(6), vec![1, -1, 1]);
        assert_eq!(as_ints(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        let z = Scalar::root_of_unity(3, 1);
        let cube = &(&z * &z) * &z;
        assert_eq!(cube, Scalar::one());
        // 1 + ζ + ζ² = 0
        let s = &(&Scalar::one() + &z) + &(&z * &z);
        assert!(s.is_zero());
        assert_eq!(Scalar::root_of_unity(2, 1), Scalar::from_int(-1));
        assert_eq!(Scalar::root_of_unity(4, 2), Scalar::from_int(-1));
    }

    #[test]
    fn mixed_orders() {
        // ζ_6 = -ζ_3², and ζ_6 · ζ_3 = ζ_2 = -1 after ζ_6³ = -1
        let z6 = Scalar::root_of_unity(6, 1);
        let z3 = Scalar::root_of_unity(3, 1);
        assert_eq!(z6, -(&z3 * &z3));
        assert_eq!(&(&z6 * &z6) * &z6, Scalar::from_int(-1));
        assert_eq!(Scalar::root_of_unity(6, 2), z3);
        assert_ne!(z3, Scalar::root_of_unity(3, 2));
    }

    #[test]
    fn rational_fast_path() {
        let a = Scalar::from_rat(r(1, 2));
        let b = Scalar::from_rat(r(1, 3));
        assert_eq!(&a + &b, Scalar::from_rat(r(5, 6)));
        assert_eq!(&a * &b, Scalar::from_rat(r(1, 6)));
        assert!((&a - &a).is_zero());
        assert_eq!(a.to_string(), "1/2");
    }
}
