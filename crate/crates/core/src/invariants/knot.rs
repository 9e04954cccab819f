use std::collections::HashMap;

use crate::diagram::{KnotDiagram, KnotPassage, LinkDiagram, Role};
use crate::error::{Error, Result};

/// Dense view of a Gauss sequence: per position the crossing index, and per
/// crossing its two positions and sign.
struct Dense {
    role: Vec<Role>,
    at: Vec<usize>,
    pos: Vec<[usize; 2]>,
    sign: Vec<i8>,
}

fn densify(passages: &[KnotPassage]) -> Result<Dense> {
    let mut index: HashMap<u32, usize> = HashMap::with_capacity(passages.len() / 2);
    let mut pos: Vec<[usize; 2]> = Vec::with_capacity(passages.len() / 2);
    let mut count: Vec<u8> = Vec::new();
    let mut sign = Vec::new();
    let mut at = Vec::with_capacity(passages.len());
    let mut overs = Vec::new();
    for (i, p) in passages.iter().enumerate() {
        let c = *index.entry(p.crossing).or_insert_with(|| {
            pos.push([i, i]);
            count.push(0);
            sign.push(p.sign);
            overs.push(0u8);
            pos.len() - 1
        });
        if count[c] == 1 {
            pos[c][1] = i;
            if sign[c] != p.sign {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {} carries two different signs",
                    p.crossing
                )));
            }
        }
        count[c] += 1;
        if p.role == Role::Over {
            overs[c] += 1;
        }
        at.push(c);
    }
    for (c, (&k, &o)) in count.iter().zip(&overs).enumerate() {
        if k != 2 || o != 1 {
            let id = passages[pos[c][0]].crossing;
            return Err(Error::InvalidDiagram(format!(
                "unpaired crossing {id} in Gauss sequence"
            )));
        }
    }
    Ok(Dense {
        role: passages.iter().map(|p| p.role).collect(),
        at,
        pos,
        sign,
    })
}

/// Second Conway coefficient of a knot.
///
/// Walks from the basepoint and switches every crossing first met from below,
/// which leaves a descending diagram of the unknot. Each switch at a crossing
/// of sign `ε` contributes `ε · lk(K₀)`, where `K₀` is the oriented smoothing
/// of the current diagram at that crossing.
pub fn a2(k: &KnotDiagram) -> Result<i64> {
    let d = densify(k.passages())?;
    let mut sign: Vec<i64> = d.sign.iter().map(|&s| s as i64).collect();
    let mut visited = vec![false; d.pos.len()];
    let mut total = 0i64;
    for (i, &c) in d.at.iter().enumerate() {
        if visited[c] {
            continue;
        }
        visited[c] = true;
        if d.role[i] == Role::Over {
            continue;
        }
        let [a, b] = d.pos[c];
        let mut spanning = 0i64;
        for (e, &[x, y]) in d.pos.iter().enumerate() {
            if e != c && ((a < x && x < b) != (a < y && y < b)) {
                spanning += sign[e];
            }
        }
        if spanning % 2 != 0 {
            return Err(Error::InvalidDiagram(format!(
                "smoothing at crossing {} meets the rest an odd number of times; the Gauss sequence is not planar",
                k.passages()[a].crossing
            )));
        }
        total += sign[c] * (spanning / 2);
        sign[c] = -sign[c];
    }
    Ok(total)
}

/// Gauss-diagram count for `a₂`: the signed number of crossing pairs `(i, j)`
/// met from the basepoint in the order under `i`, over `j`, over `i`, under `j`.
pub fn a2_gauss_formula(k: &KnotDiagram) -> Result<i64> {
    let d = densify(k.passages())?;
    let m = d.pos.len();
    let (mut over, mut under) = (vec![0; m], vec![0; m]);
    for (c, &[x, y]) in d.pos.iter().enumerate() {
        if d.role[x] == Role::Over {
            (over[c], under[c]) = (x, y);
        } else {
            (over[c], under[c]) = (y, x);
        }
    }
    let mut total = 0i64;
    for i in 0..m {
        if under[i] > over[i] {
            continue;
        }
        for j in 0..m {
            if j != i
                && under[i] < over[j]
                && over[j] < over[i]
                && over[i] < under[j]
            {
                total += (d.sign[i] * d.sign[j]) as i64;
            }
        }
    }
    Ok(total)
}

/// Linking number: half the signed count of crossings between the two
/// components.
pub fn lk(l: &LinkDiagram) -> Result<i64> {
    let total: i64 = l.inter_component().iter().map(|p| p.sign as i64).sum();
    if total % 2 != 0 {
        return Err(Error::InvalidDiagram(format!(
            "inter-component sign sum {total} is odd"
        )));
    }
    Ok(total / 2)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::braid::{torus_knot_2, BraidWord};

    fn knot(word: &[i32], strands: usize) -> KnotDiagram {
        BraidWord::new(strands, word).unwrap().closure_knot().unwrap()
    }

    #[test]
    fn unknot_is_zero() {
        let k = KnotDiagram::default();
        assert_eq!(a2(&k).unwrap(), 0);
        assert_eq!(a2_gauss_formula(&k).unwrap(), 0);
        // a single kink
        let kink = knot(&[1], 2);
        assert_eq!(a2(&kink).unwrap(), 0);
        let k = knot(&[1, -2], 3);
        assert_eq!(a2(&k).unwrap(), 0);
    }

    #[test]
    fn torus_knots() {
        for (s, want) in [(1, 1), (2, 3), (3, 6), (4, 10), (5, 15)] {
            let k = torus_knot_2(s);
            assert_eq!(a2(&k).unwrap(), want, "s = {s}");
            assert_eq!(a2_gauss_formula(&k).unwrap(), want, "s = {s}");
            assert_eq!(a2(&k.mirrored()).unwrap(), want);
        }
    }

    #[test]
    fn figure_eight_both_algorithms() {
        let k = knot(&[1, -2, 1, -2], 3);
        assert_eq!(a2(&k).unwrap(), -1);
        assert_eq!(a2_gauss_formula(&k).unwrap(), -1);
    }

    #[test]
    fn torus_link_linking_numbers() {
        let l = BraidWord::new(2, &[1, 1, 1, 1]).unwrap().closure_link().unwrap();
        assert_eq!(lk(&l).unwrap().abs(), 2);
        assert_eq!(lk(&l.swapped()).unwrap(), lk(&l).unwrap());
        let hopf = BraidWord::new(2, &[-1, -1]).unwrap().closure_link().unwrap();
        assert_eq!(lk(&hopf).unwrap(), -1);
        assert_eq!(lk(&LinkDiagram::default()).unwrap(), 0);
    }

    #[test]
    fn malformed_sequences_are_rejected() {
        let p = KnotPassage {
            crossing: 4,
            role: Role::Over,
            sign: 1,
        };
        assert!(KnotDiagram::new(vec![p, p]).is_err());
        assert!(KnotDiagram::new(vec![p]).is_err());
        let q = KnotPassage {
            role: Role::Under,
            sign: -1,
            ..p
        };
        assert!(KnotDiagram::new(vec![p, q]).is_err());
    }

    fn braid_word() -> impl Strategy<Value = Vec<i32>> {
        prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2, 3, -3]), 0..14)
    }

    /// Makes a knot out of an arbitrary 4-strand word by appending `σ₁σ₂σ₃`
    /// as needed until the closure has one component.
    fn to_knot(mut word: Vec<i32>) -> KnotDiagram {
        for extra in [1, 2, 3, 1, 2, 3, 1, 2, 3] {
            if let Ok(k) = BraidWord::new(4, &word).unwrap().closure_knot() {
                return k;
            }
            word.push(extra);
        }
        BraidWord::new(4, &word).unwrap().closure_knot().unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn primary_matches_oracle(word in braid_word()) {
            let k = to_knot(word);
            prop_assert_eq!(a2(&k).unwrap(), a2_gauss_formula(&k).unwrap());
        }

        #[test]
        fn basepoint_and_direction_invariance(word in braid_word(), shift in 0usize..40) {
            let k = to_knot(word);
            let base = a2(&k).unwrap();
            prop_assert_eq!(a2(&k.rotated(shift)).unwrap(), base);
            prop_assert_eq!(a2(&k.reversed()).unwrap(), base);
            prop_assert_eq!(a2_gauss_formula(&k.rotated(shift)).unwrap(), base);
            prop_assert_eq!(a2(&k.mirrored()).unwrap(), base);
        }

        #[test]
        fn r2_insertion_invariance(word in braid_word(), at in 0usize..40, g in 1i32..4, s in prop::bool::ANY) {
            let k = to_knot(word.clone());
            let mut longer = word;
            let at = at % (longer.len() + 1);
            let g = if s { g } else { -g };
            longer.splice(at..at, [g, -g]);
            let k2 = to_knot(longer);
            prop_assert_eq!(k2.crossing_count(), k.crossing_count() + 2);
            prop_assert_eq!(a2(&k2).unwrap(), a2(&k).unwrap());
            prop_assert_eq!(a2_gauss_formula(&k2).unwrap(), a2(&k).unwrap());
        }
    }
}
