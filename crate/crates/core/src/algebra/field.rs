use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Element code: the base-p digits of the code are the polynomial coefficients,
/// least significant digit first.
pub type FieldElem = u8;

/// Shared handle to a field.
pub type Field = Arc<FieldSpec>;

/// GF(p^e) with log/antilog multiplication tables.
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: usize,
    reduction_poly: Vec<u32>,
    add: Vec<u8>,
    neg: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u16>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.e)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.reduction_poly == other.reduction_poly
    }
}

impl Eq for FieldSpec {}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn digits(code: usize, p: u32, e: u32) -> Vec<u32> {
    let mut c = code;
    (0..e)
        .map(|_| {
            let d = (c % p as usize) as u32;
            c /= p as usize;
            d
        })
        .collect()
}

fn undigits(coeffs: &[u32], p: u32) -> usize {
    coeffs.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|x| a * x % p == 1).expect("nonzero residue has an inverse")
}

/// Remainder of `num` modulo the monic-or-not `den` over GF(p); coefficients low to high.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = inv_mod(den[dd], p);
    while r.len() > dd {
        let top = *r.last().unwrap();
        if top != 0 {
            let factor = top * lead_inv % p;
            let shift = r.len() - 1 - dd;
            for (i, &c) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - factor * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..(p as usize).pow(d as u32) {
            let mut divisor = digits(low, p, d as u32);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Builds GF(p^e). The reduction polynomial is the monic irreducible of degree
/// `e` whose lower coefficients have the smallest base-p code.
pub fn make_field(p: u64, e: u32) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if e == 0 {
        return Err(Error::BadDegree);
    }
    let q = (p as u128).checked_pow(e).filter(|&q| q <= 256);
    let Some(q) = q else {
        return Err(Error::FieldTooLarge { p, e });
    };
    let (p, q) = (p as u32, q as usize);
    let reduction_poly = if e == 1 {
        vec![0, 1]
    } else {
        (0..q)
            .map(|low| {
                let mut poly = digits(low, p, e);
                poly.push(1);
                poly
            })
            .find(|poly| is_irreducible(poly, p))
            .expect("an irreducible polynomial exists in every degree")
    };

    let mut add = vec![0u8; q * q];
    let mut neg = vec![0u8; q];
    for a in 0..q {
        let da = digits(a, p, e);
        neg[a] = undigits(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p) as u8;
        for b in 0..q {
            let db = digits(b, p, e);
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a * q + b] = undigits(&sum, p) as u8;
        }
    }

    let slow_mul = |a: usize, b: usize| -> usize {
        let (da, db) = (digits(a, p, e), digits(b, p, e));
        let mut prod = vec![0u32; 2 * e as usize - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut rem = poly_rem(&prod, &reduction_poly, p);
        rem.resize(e as usize, 0);
        undigits(&rem, p)
    };

    let order = q - 1;
    let generator = (1..q)
        .find(|&g| {
            let mut x = g;
            let mut k = 1;
            while x != 1 {
                x = slow_mul(x, g);
                k += 1;
            }
            k == order
        })
        .expect("the multiplicative group is cyclic");
    let mut exp = vec![0u8; 2 * order];
    let mut log = vec![0u16; q];
    let mut x = 1usize;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = x as u8;
        if i < order {
            log[x] = i as u16;
        }
        x = slow_mul(x, generator);
    }

    Ok(Arc::new(FieldSpec { p, e, q, reduction_poly, add, neg, exp, log }))
}

impl FieldSpec {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Monic reduction polynomial, coefficients from the constant term up.
    /// For prime fields this is `x`.
    pub fn reduction_poly(&self) -> &[u32] {
        &self.reduction_poly
    }

    pub fn contains(&self, code: u64) -> bool {
        (code as usize) < self.q
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        n.rem_euclid(self.p as i64) as FieldElem
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
        }
    }

    /// Panics on zero.
    #[inline]
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        assert!(a != 0, "zero has no inverse");
        let order = self.q - 1;
        self.exp[(order - self.log[a as usize] as usize) % order]
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(|c| c as FieldElem)
    }
}
