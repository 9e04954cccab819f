use num::{BigInt, Integer, Signed, ToPrimitive, Zero};
use serde_json::json;

use super::closed_forms::{c_n, r_n, residue_modulus, sigma, tau};
use super::gadgets::{add_delta_step, twist_spatial, TwistParams};
use crate::geometry::Projection;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::graph::{factorial, Vertex};
use crate::invariants::invariant_report;

/// Which twist edges the plan uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Odd `n`: `(k, l) = (1, 0)`.
    Odd,
    /// Even `n`: `(k, l) = ((n-6)/2, (n-6)/2)`.
    Even,
}

/// Recipe for an embedding of `K_n` whose Hamiltonian `Σ a₂` equals `m`:
/// a twist embedding followed by `delta_count` signed delta gadgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationPlan {
    pub n: u32,
    pub m: BigInt,
    /// `m = (n-5)!·q' + c_n`.
    pub q_prime: BigInt,
    pub branch: Branch,
    pub twist: TwistParams,
    /// Exact Hamiltonian sum of the twist embedding.
    pub predicted_sum: BigInt,
    pub delta_count: BigInt,
    pub delta_path: [Vertex; 4],
}

pub fn plan_realization(n: u32, m: &BigInt) -> Result<RealizationPlan> {
    let modulus = residue_modulus(n)?;
    let r = r_n(n)?;
    if (m - &r).mod_floor(&modulus) != BigInt::zero() {
        return Err(Error::InadmissibleTarget {
            n,
            m: m.to_string(),
            residue: r.to_string(),
            modulus: modulus.to_string(),
        });
    }
    let c = c_n(n)?;
    let (q_prime, rem) = (m - &c).div_rem(&modulus);
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "c_{n} = {c} is not congruent to r_{n} = {r} modulo {modulus}"
        )));
    }
    let s = q_prime
        .mod_floor(&BigInt::from(n - 4))
        .to_u64()
        .expect("residue below n - 4");
    let (branch, k, l) = if n % 2 == 1 {
        (Branch::Odd, 1, 0)
    } else {
        let h = (n as u64 - 6) / 2;
        (Branch::Even, h, h)
    };
    let twist = TwistParams::new(n, k, l, s)?;
    let big = BigInt::from(factorial(n - 4));
    let predicted_sum = &c + &big * sigma(k, l, s) + &modulus * tau(n, k, l, s)?;
    let (delta_count, slack) = (m - &predicted_sum).div_rem(&big);
    if !slack.is_zero() {
        return Err(Error::Internal(format!(
            "twist sum {predicted_sum} is not congruent to {m} modulo {big}"
        )));
    }
    Ok(RealizationPlan {
        n,
        m: m.clone(),
        q_prime,
        branch,
        twist,
        predicted_sum,
        delta_count,
        delta_path: [1, 2, 3, 4],
    })
}

impl RealizationPlan {
    pub fn build(&self) -> Result<Diagram> {
        let count = self
            .delta_count
            .abs()
            .to_u64()
            .ok_or_else(|| Error::InvalidArgument("delta count too large".into()))?;
        let sign: i8 = if self.delta_count.is_negative() { -1 } else { 1 };
        let mut g = twist_spatial(self.twist)?;
        for _ in 0..count {
            add_delta_step(&mut g, self.delta_path, sign)?;
        }
        let mut d = g.to_diagram(Projection::Z)?;
        let meta = d.meta.as_mut().expect("twist embedding has provenance");
        meta.builder = "realize".into();
        meta.params.insert("m".into(), json!(self.m.to_string()));
        meta.params.insert("delta_count".into(), json!(self.delta_count.to_string()));
        meta.params
            .insert("predicted_twist_sum".into(), json!(self.predicted_sum.to_string()));
        Ok(d)
    }
}

/// An embedding of `K_n` with Hamiltonian `Σ a₂ = m`.
pub fn realize(n: u32, m: &BigInt) -> Result<Diagram> {
    plan_realization(n, m)?.build()
}

/// [`realize`], then recompute the sum by enumeration and insist it is `m`.
pub fn realize_verified(n: u32, m: &BigInt) -> Result<Diagram> {
    let d = realize(n, m)?;
    let got = invariant_report(&d)?.sum_a2_hamiltonian;
    if BigInt::from(got) != *m {
        return Err(Error::Internal(format!(
            "realized diagram for n = {n} has sum {got}, expected {m}"
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn plan_examples() {
        let p = plan_realization(7, &b(9)).unwrap();
        assert_eq!((p.twist.s, p.twist.k, p.twist.l), (1, 1, 0));
        assert_eq!(p.predicted_sum, b(9));
        assert_eq!(p.delta_count, b(0));

        let p = plan_realization(7, &b(-1)).unwrap();
        assert_eq!(p.twist.s, 2);
        assert_eq!(p.predicted_sum, b(41));
        assert_eq!(p.delta_count, b(-7));

        let p = plan_realization(8, &b(27)).unwrap();
        assert_eq!(p.branch, Branch::Even);
        assert_eq!((p.twist.k, p.twist.l, p.twist.s), (1, 1, 1));
        assert_eq!(p.predicted_sum, b(75));
        assert_eq!(p.delta_count, b(-2));

        let p = plan_realization(7, &b(13)).unwrap();
        assert_eq!((p.twist.s, p.delta_count.clone()), (0, b(2)));

        match plan_realization(7, &b(2)) {
            Err(Error::InadmissibleTarget { residue, modulus, .. }) => {
                assert_eq!((residue.as_str(), modulus.as_str()), ("1", "2"));
            }
            other => panic!("expected inadmissible target, got {other:?}"),
        }
    }

    #[test]
    fn plan_invariants_hold_at_large_n() {
        for n in 6..=24u32 {
            let modulus = residue_modulus(n).unwrap();
            let r = r_n(n).unwrap();
            for j in -7i64..=7 {
                let m = &r + &modulus * j;
                let p = plan_realization(n, &m).unwrap();
                let big = BigInt::from(factorial(n - 4));
                assert_eq!(&p.predicted_sum + &p.delta_count * big, m);
                assert!(p.twist.s <= n as u64 - 5);
                if n > 6 {
                    let bad = &m + 1;
                    assert!(plan_realization(n, &bad).is_err());
                }
            }
        }
    }
}
