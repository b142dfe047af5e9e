//! Small finite fields by lookup table.
//!
//! An element of `GF(p^e)` is stored as the integer `Σ c_i p^i` where
//! `c_0 + c_1 x + … + c_{e-1} x^{e-1}` is its residue modulo a fixed
//! irreducible polynomial.

use crate::error::{Error, Result};

/// Field sizes with a shipped construction.
pub const SUPPORTED: [usize; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

/// Monic irreducible moduli for the non-prime fields, constant term first
/// (the leading 1 included).
fn modulus(q: usize) -> Option<(usize, Vec<usize>)> {
    match q {
        4 => Some((2, vec![1, 1, 1])),
        8 => Some((2, vec![1, 1, 0, 1])),
        9 => Some((3, vec![1, 0, 1])),
        2 | 3 | 5 | 7 | 11 | 13 => Some((q, vec![0, 1])),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    e: usize,
    modulus: Vec<usize>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    primitive: usize,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, modulus) =
            modulus(q).ok_or_else(|| Error::InvalidArgument(format!("unsupported field size {q}")))?;
        let e = modulus.len() - 1;
        let to_vec = |mut x: usize| -> Vec<usize> {
            (0..e)
                .map(|_| {
                    let c = x % p;
                    x /= p;
                    c
                })
                .collect()
        };
        let from_vec = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let va = to_vec(a);
            for b in 0..q {
                let vb = to_vec(b);
                let sum: Vec<usize> = va.iter().zip(&vb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = from_vec(&sum) as u8;
                let mut prod = vec![0usize; 2 * e];
                for (i, x) in va.iter().enumerate() {
                    for (j, y) in vb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for d in (e..2 * e).rev() {
                    let c = prod[d];
                    if c != 0 {
                        for (i, m) in modulus.iter().enumerate() {
                            let idx = d - e + i;
                            prod[idx] = (prod[idx] + (p - c) * m) % p;
                        }
                    }
                }
                mul[a * q + b] = from_vec(&prod[..e]) as u8;
            }
        }
        let mut field = FiniteField {
            q,
            p,
            e,
            modulus,
            add,
            mul,
            neg: vec![0; q],
            inv: vec![0; q],
            primitive: 0,
        };
        for a in 0..q {
            field.neg[a] = (0..q).find(|&b| field.add(a, b) == 0).unwrap() as u8;
            if a != 0 {
                field.inv[a] = (1..q).find(|&b| field.mul(a, b) == 1).unwrap_or(0) as u8;
            }
        }
        field.primitive = (1..q)
            .find(|&a| field.multiplicative_order(a) == q - 1)
            .unwrap_or(1);
        Ok(field)
    }

    pub fn size(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    /// Coefficients of the modulus, constant term first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }

    /// The least generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        self.primitive
    }

    pub fn multiplicative_order(&self, a: usize) -> usize {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    /// The polynomial basis `1, x, …, x^{e-1}` over the prime field.
    pub fn additive_basis(&self) -> Vec<usize> {
        (0..self.e).map(|i| self.p.pow(i as u32)).collect()
    }

    /// Text form: the integer code for prime fields, the coefficient string
    /// (constant term last) otherwise.
    pub fn label(&self, a: usize) -> String {
        if self.e == 1 {
            return a.to_string();
        }
        let mut digits = Vec::with_capacity(self.e);
        let mut x = a;
        for _ in 0..self.e {
            digits.push(x % self.p);
            x /= self.p;
        }
        digits.iter().rev().map(|d| d.to_string()).collect()
    }

    /// Exhaustive check of the field axioms and cyclicity of the
    /// multiplicative group.
    pub fn verify_axioms(&self) -> Result<()> {
        let q = self.q;
        let fail = |what: &str| Err(Error::Validation(format!("GF({q}): {what}")));
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return fail("identity elements");
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail("additive inverse");
            }
            if a != 0 && self.inv(a).map(|b| self.mul(a, b)) != Some(1) {
                return fail("multiplicative inverse");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        if self.multiplicative_order(self.primitive) != q - 1 {
            return fail("multiplicative group is not cyclic");
        }
        Ok(())
    }
}
