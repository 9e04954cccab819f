use num::{BigInt, Integer};

use crate::error::{Error, Result};
use crate::graph::{binomial, factorial};

fn big_factorial(k: u32) -> BigInt {
    BigInt::from(factorial(k))
}

fn choose2(x: i64) -> BigInt {
    if x < 2 {
        BigInt::from(0)
    } else {
        BigInt::from(x * (x - 1) / 2)
    }
}

fn need_six(n: u32) -> Result<()> {
    if n < 6 {
        return Err(Error::InvalidArgument(format!("need n >= 6, got {n}")));
    }
    Ok(())
}

/// `(n-5)!`, the modulus of the Hamiltonian congruence.
pub fn residue_modulus(n: u32) -> Result<BigInt> {
    need_six(n)?;
    Ok(big_factorial(n - 5))
}

/// The universal residue of `Σ a₂` over Hamiltonian knots modulo `(n-5)!`:
/// `(n-5)!/2` when `n ≡ 0, 7 (mod 8)`, otherwise `0`. `r_6 = 0`.
pub fn r_n(n: u32) -> Result<BigInt> {
    need_six(n)?;
    if n % 8 == 0 || n % 8 == 7 {
        Ok(big_factorial(n - 5) / 2)
    } else {
        Ok(BigInt::from(0))
    }
}

/// `Σ a₂` over the Hamiltonian knots of the standard embedding:
/// `((n-5)!/2)·(C(n,6) − C(n-1,5))`.
pub fn c_n(n: u32) -> Result<BigInt> {
    need_six(n)?;
    let diff = BigInt::from(binomial(n as u64, 6)) - BigInt::from(binomial(n as u64 - 1, 5));
    let twice = big_factorial(n - 5) * diff;
    let (q, r) = twice.div_rem(&BigInt::from(2));
    debug_assert_eq!(r, BigInt::from(0));
    Ok(q)
}

/// `σ(k,l;s) = s(s(k+l+1) − k)`.
pub fn sigma(k: u64, l: u64, s: u64) -> BigInt {
    let (k, l, s) = (BigInt::from(k), BigInt::from(l), BigInt::from(s));
    &s * (&s * (&k + &l + 1) - &k)
}

/// `τ(k,l;s) = s((1−s)(k²+kl+l²) + s·C(k,2) + s·C(n−(k+l+4),2) + (s−2)·C(l,2))`.
pub fn tau(n: u32, k: u64, l: u64, s: u64) -> Result<BigInt> {
    need_six(n)?;
    if k + l > n as u64 - 4 {
        return Err(Error::InvalidArgument(format!(
            "twist parameters need k + l <= n - 4, got k = {k}, l = {l}, n = {n}"
        )));
    }
    let (ki, li, si) = (k as i64, l as i64, s as i64);
    let rest = n as i64 - (ki + li + 4);
    let quad = BigInt::from(ki * ki + ki * li + li * li);
    let inner = BigInt::from(1 - si) * quad
        + BigInt::from(si) * choose2(ki)
        + BigInt::from(si) * choose2(rest)
        + BigInt::from(si - 2) * choose2(li);
    Ok(BigInt::from(si) * inner)
}
