//! Knot and link invariants of diagrams, and their sums over the cycle
//! families of `K_n`.

mod knot;

use num::{BigInt, BigRational, Integer, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub use knot::{a2, a2_gauss_formula, lk};

use crate::constructions::r_n;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::graph::{self, binomial, factorial, Cycle, CyclePair, GraphSpec};

/// All invariant sums of one spatial `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: u32,
    pub sum_a2_hamiltonian: i64,
    pub sum_a2_pentagons: i64,
    pub sum_lk2_triangles: i64,
    pub sum_lk_triangles: i64,
    /// `(n-5)!`.
    pub residue_modulus: u64,
    /// `sum_a2_hamiltonian mod (n-5)!`, in `[0, modulus)`.
    pub residue: u64,
}

fn run<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(job))
        }
    }
}

/// `Σ a₂` over the given cycles of `d`.
pub fn sum_a2(d: &Diagram, cycles: &[Cycle]) -> Result<i64> {
    cycles
        .par_iter()
        .map(|c| d.extract_knot(c).and_then(|k| a2(&k)))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

/// `(Σ lk², Σ lk)` over the given cycle pairs of `d`.
pub fn sum_lk(d: &Diagram, pairs: &[CyclePair]) -> Result<(i64, i64)> {
    pairs
        .par_iter()
        .map(|p| d.extract_link(p).and_then(|l| lk(&l)).map(|x| (x * x, x)))
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))
}

/// Computes every sum by full enumeration, on the global thread pool.
pub fn invariant_report(d: &Diagram) -> Result<InvariantReport> {
    report_impl(d, None)
}

/// As [`invariant_report`], on a dedicated pool of `workers` threads.
pub fn invariant_report_with_workers(d: &Diagram, workers: usize) -> Result<InvariantReport> {
    report_impl(d, Some(workers))
}

fn report_impl(d: &Diagram, workers: Option<usize>) -> Result<InvariantReport> {
    let n = d.n();
    if n < 6 {
        return Err(Error::InvalidArgument(format!(
            "invariant report needs n >= 6, got {n}"
        )));
    }
    d.ensure_valid()?;
    let spec = GraphSpec::new(n)?;
    let hamiltonian: Vec<Cycle> = graph::hamiltonian_cycles(spec).collect();
    let pentagons = graph::p_cycles(spec, 5)?;
    let pairs = graph::disjoint_triangle_pairs(spec);
    let (h, p, (l2, l1)) = run(workers, || -> Result<_> {
        Ok((
            sum_a2(d, &hamiltonian)?,
            sum_a2(d, &pentagons)?,
            sum_lk(d, &pairs)?,
        ))
    })??;
    let modulus = factorial(n - 5)
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("(n-5)! overflows for n = {n}")))?;
    let residue = (h as i128).rem_euclid(modulus as i128) as u64;
    Ok(InvariantReport {
        n,
        sum_a2_hamiltonian: h,
        sum_a2_pentagons: p,
        sum_lk2_triangles: l2,
        sum_lk_triangles: l1,
        residue_modulus: modulus,
        residue,
    })
}

/// Both sides of the integral Conway-Gordon type identity
/// `Σ_Ham a₂ − (n−5)!·Σ_pent a₂ = ((n−5)!/2)·(Σ lk² − C(n−1,5))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub lhs: BigInt,
    pub rhs: BigRational,
    pub pass: bool,
}

pub fn identity_verdict(r: &InvariantReport) -> IdentityVerdict {
    let n = r.n;
    let f = BigInt::from(factorial(n - 5));
    let lhs = BigInt::from(r.sum_a2_hamiltonian) - &f * r.sum_a2_pentagons;
    let excess = BigInt::from(r.sum_lk2_triangles) - BigInt::from(binomial(n as u64 - 1, 5));
    let rhs = BigRational::new(f * excess, BigInt::from(2));
    let pass = rhs == BigRational::from_integer(lhs.clone());
    IdentityVerdict { lhs, rhs, pass }
}

pub fn verify_identity(d: &Diagram) -> Result<IdentityVerdict> {
    Ok(identity_verdict(&invariant_report(d)?))
}

/// Residue of the Hamiltonian sum modulo `modulus`, with a verdict whenever
/// `modulus` divides `(n-5)!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceVerdict {
    pub modulus: BigInt,
    pub residue: BigInt,
    /// `r_n mod modulus`, when a verdict applies.
    pub expected: Option<BigInt>,
    pub pass: Option<bool>,
}

pub fn congruence_verdict(r: &InvariantReport, modulus: Option<BigInt>) -> Result<CongruenceVerdict> {
    let full = BigInt::from(factorial(r.n - 5));
    let modulus = modulus.unwrap_or_else(|| full.clone());
    if modulus <= BigInt::zero() {
        return Err(Error::InvalidArgument(format!(
            "modulus must be positive, got {modulus}"
        )));
    }
    let residue = BigInt::from(r.sum_a2_hamiltonian).mod_floor(&modulus);
    if full.is_multiple_of(&modulus) {
        let expected = r_n(r.n)?.mod_floor(&modulus);
        let pass = expected == residue;
        Ok(CongruenceVerdict {
            modulus,
            residue,
            expected: Some(expected),
            pass: Some(pass),
        })
    } else {
        Ok(CongruenceVerdict {
            modulus,
            residue,
            expected: None,
            pass: None,
        })
    }
}

pub fn verify_congruence(d: &Diagram, modulus: Option<BigInt>) -> Result<CongruenceVerdict> {
    congruence_verdict(&invariant_report(d)?, modulus)
}

/// For `K_6`, whether `Σ lk` over the ten triangle pairs is odd. `None` for
/// other `n`.
pub fn sachs_verdict(r: &InvariantReport) -> Option<bool> {
    (r.n == 6).then_some(r.sum_lk_triangles.rem_euclid(2) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{diagram_from_points, random_embedding, standard_diagram, Projection};

    #[test]
    fn standard_k7_report() {
        let r = invariant_report(&standard_diagram(7).unwrap()).unwrap();
        assert_eq!(r.sum_a2_hamiltonian, 1);
        assert_eq!(r.sum_a2_pentagons, 0);
        assert_eq!(r.sum_lk2_triangles, 7);
        assert_eq!((r.residue_modulus, r.residue), (2, 1));
    }

    #[test]
    fn standard_k6_report() {
        let d = standard_diagram(6).unwrap();
        let r = invariant_report(&d).unwrap();
        assert_eq!(r.sum_a2_hamiltonian, 0);
        assert_eq!(r.sum_lk2_triangles, 1);
        assert_eq!(sachs_verdict(&r), Some(true));
        let v = identity_verdict(&r);
        assert!(v.pass);
        assert_eq!(v.lhs, BigInt::zero());
    }

    #[test]
    fn hopf_pair_of_standard_k6() {
        let d = standard_diagram(6).unwrap();
        let hopf = CyclePair::new(
            Cycle::new(vec![1, 3, 5]).unwrap(),
            Cycle::new(vec![2, 4, 6]).unwrap(),
        )
        .unwrap();
        assert_eq!(lk(&d.extract_link(&hopf).unwrap()).unwrap().abs(), 1);
        let split = CyclePair::new(
            Cycle::new(vec![1, 2, 3]).unwrap(),
            Cycle::new(vec![4, 5, 6]).unwrap(),
        )
        .unwrap();
        let l = d.extract_link(&split).unwrap();
        assert!(l.inter_component().is_empty());
        assert_eq!(lk(&l).unwrap(), 0);
        let linked: Vec<_> = graph::disjoint_triangle_pairs(GraphSpec::new(6).unwrap())
            .into_iter()
            .filter(|p| lk(&d.extract_link(p).unwrap()).unwrap() != 0)
            .collect();
        assert_eq!(linked, vec![hopf]);
    }

    #[test]
    fn standard_k6_knot_is_trivial() {
        let d = standard_diagram(6).unwrap();
        let k = d.extract_knot(&Cycle::new(vec![1, 3, 5, 2, 4, 6]).unwrap()).unwrap();
        assert!(k.crossing_count() > 0);
        assert_eq!(a2(&k).unwrap(), 0);
        let k7 = standard_diagram(7).unwrap();
        let k = k7.extract_knot(&Cycle::new((1..=7).collect()).unwrap()).unwrap();
        assert_eq!(k.crossing_count(), 0);
        let tri = d.extract_knot(&Cycle::new(vec![1, 4, 6]).unwrap()).unwrap();
        for p in tri.passages() {
            let c = d.crossing(p.crossing).unwrap();
            for e in [c.over, c.under] {
                assert!([(1, 4), (4, 6), (1, 6)].contains(&(e.u, e.v)));
            }
        }
    }

    #[test]
    fn knot_and_link_extraction_agree() {
        let d = diagram_from_points(&random_embedding(7, 11, 20).unwrap(), Projection::Z).unwrap();
        for pair in graph::disjoint_triangle_pairs(GraphSpec::new(7).unwrap()) {
            let link = d.extract_link(&pair).unwrap();
            for (i, c) in [pair.first(), pair.second()].into_iter().enumerate() {
                let k = d.extract_knot(c).unwrap();
                let mut ids: Vec<u32> = k
                    .passages()
                    .iter()
                    .filter(|p| p.role == crate::diagram::Role::Over)
                    .map(|p| p.crossing)
                    .collect();
                ids.sort_unstable();
                assert_eq!(ids, link.intra_component(i));
                for p in k.passages() {
                    assert!(d.crossing(p.crossing).is_some());
                }
            }
            assert_eq!(lk(&link).unwrap(), lk(&link.swapped()).unwrap());
        }
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let d = diagram_from_points(&random_embedding(7, 5, 15).unwrap(), Projection::Z).unwrap();
        let one = invariant_report_with_workers(&d, 1).unwrap();
        for w in [2, 3, 8] {
            assert_eq!(invariant_report_with_workers(&d, w).unwrap(), one);
        }
        assert_eq!(invariant_report(&d).unwrap(), one);
    }

    #[test]
    fn congruence_with_custom_moduli() {
        let r = invariant_report(&standard_diagram(8).unwrap()).unwrap();
        assert_eq!(r.sum_a2_hamiltonian, 21);
        let v = congruence_verdict(&r, None).unwrap();
        assert_eq!(v.residue, BigInt::from(3));
        assert_eq!(v.pass, Some(true));
        let v = congruence_verdict(&r, Some(BigInt::from(3))).unwrap();
        assert_eq!(v.pass, Some(true));
        let v = congruence_verdict(&r, Some(BigInt::from(4))).unwrap();
        assert_eq!((v.residue, v.pass), (BigInt::from(1), None));
        assert!(congruence_verdict(&r, Some(BigInt::zero())).is_err());
    }

    #[test]
    fn small_n_is_rejected() {
        assert!(invariant_report(&standard_diagram(5).unwrap()).is_err());
    }
}
