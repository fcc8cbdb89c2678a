//! Prime fields `F_p` with exact modular arithmetic. These stand in for the
//! algebraically closed base field at desk scale; the limitation is
//! documented where it matters (a representation can be simple over `F_p`
//! yet not over the closure and vice versa, while a rational destabilizing
//! subspace disproves stability over every extension).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    /// Reduces a signed integer into `0..p`.
    pub fn reduce(self, x: i64) -> u64 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// The smallest primitive root mod p. Used to fix the enumeration order
    /// of roots of unity, so eigenspace labels are reproducible.
    pub fn smallest_primitive_root(self) -> u64 {
        if self.p == 2 {
            return 1;
        }
        let factors = prime_factors(self.p - 1);
        'outer: for g in 2..self.p {
            for &q in &factors {
                if self.pow(g, (self.p - 1) / q) == 1 {
                    continue 'outer;
                }
            }
            return g;
        }
        unreachable!("every prime field has a primitive root")
    }

    /// The canonical ordering of the `r`-th roots of unity: `rho_1 = 1`,
    /// then ascending discrete log relative to the smallest primitive root.
    /// Requires `r | p - 1`.
    pub fn roots_of_unity(self, r: u64) -> Result<Vec<u64>> {
        if r == 0 || (self.p - 1) % r != 0 {
            return Err(Error::InvalidModule(format!(
                "{}-th roots of unity do not all lie in F_{}",
                r, self.p
            )));
        }
        let g = self.smallest_primitive_root();
        let zeta = self.pow(g, (self.p - 1) / r);
        let mut out = Vec::with_capacity(r as usize);
        let mut x = 1u64;
        for _ in 0..r {
            out.push(x);
            x = self.mul(x, zeta);
        }
        Ok(out)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
