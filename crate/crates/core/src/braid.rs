//! Braid words and the Gauss sequences of their crossings.
//!
//! Strands run top to bottom. The letter `σᵢ` swaps the strands at positions
//! `i` and `i+1`; the strand moving left passes over and the crossing is
//! positive. `σᵢ⁻¹` is its mirror: the strand moving right passes over and the
//! crossing is negative.

use crate::diagram::{KnotDiagram, KnotPassage, LinkDiagram, Role};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    /// 1-based position of the left strand.
    pub gen: usize,
    pub exp: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

/// A crossing of the braid, named by the strands (starting positions,
/// 0-based) that meet there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidCrossing {
    pub over: usize,
    pub under: usize,
    pub sign: i8,
}

impl BraidWord {
    /// Letters as signed generator indices: `2` is `σ₂`, `-1` is `σ₁⁻¹`.
    pub fn new(strands: usize, word: &[i32]) -> Result<Self> {
        let mut letters = Vec::with_capacity(word.len());
        for &w in word {
            let gen = w.unsigned_abs() as usize;
            if w == 0 || gen >= strands {
                return Err(Error::InvalidArgument(format!(
                    "generator {w} invalid on {strands} strands"
                )));
            }
            letters.push(Letter {
                gen,
                exp: if w > 0 { 1 } else { -1 },
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|l| Letter { gen: l.gen, exp: -l.exp })
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter { gen: l.gen, exp: -l.exp })
                .collect(),
        }
    }

    pub fn power(&self, k: usize) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }

    /// The crossings in word order, plus the final position of each strand.
    pub fn crossings(&self) -> (Vec<BraidCrossing>, Vec<usize>) {
        // at[pos] = strand currently at pos
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut out = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let (left, right) = (at[l.gen - 1], at[l.gen]);
            let c = if l.exp > 0 {
                BraidCrossing { over: right, under: left, sign: 1 }
            } else {
                BraidCrossing { over: left, under: right, sign: -1 }
            };
            out.push(c);
            at.swap(l.gen - 1, l.gen);
        }
        let mut end = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            end[s] = pos;
        }
        (out, end)
    }

    pub fn is_pure(&self) -> bool {
        let (_, end) = self.crossings();
        end.iter().enumerate().all(|(s, &p)| s == p)
    }

    /// Passages met by one strand, top to bottom, as `(crossing index, role)`.
    pub fn strand_passages(&self, strand: usize) -> Vec<(usize, Role, i8)> {
        let (cs, _) = self.crossings();
        cs.iter()
            .enumerate()
            .filter_map(|(i, c)| {
                if c.over == strand {
                    Some((i, Role::Over, c.sign))
                } else if c.under == strand {
                    Some((i, Role::Under, c.sign))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Gauss sequences of the closure, one per component, each starting at the
    /// top of its lowest-numbered strand.
    pub fn closure(&self) -> Vec<Vec<KnotPassage>> {
        let (_, end) = self.crossings();
        let mut used = vec![false; self.strands];
        let mut comps = Vec::new();
        for start in 0..self.strands {
            if used[start] {
                continue;
            }
            let mut seq = Vec::new();
            let mut s = start;
            while !used[s] {
                used[s] = true;
                seq.extend(self.strand_passages(s).into_iter().map(|(i, role, sign)| {
                    KnotPassage {
                        crossing: i as u32,
                        role,
                        sign,
                    }
                }));
                // the strand ending at position p continues as the strand starting at p
                s = end[s];
            }
            comps.push(seq);
        }
        comps
    }

    pub fn closure_knot(&self) -> Result<KnotDiagram> {
        let mut comps = self.closure();
        if comps.len() != 1 {
            return Err(Error::InvalidArgument(format!(
                "closure has {} components, expected a knot",
                comps.len()
            )));
        }
        KnotDiagram::new(comps.pop().unwrap())
    }

    pub fn closure_link(&self) -> Result<LinkDiagram> {
        let comps = self.closure();
        if comps.len() != 2 {
            return Err(Error::InvalidArgument(format!(
                "closure has {} components, expected two",
                comps.len()
            )));
        }
        let [a, b]: [Vec<KnotPassage>; 2] = comps.try_into().unwrap();
        LinkDiagram::new(a, b)
    }
}

/// The 3-strand pure braid `(σ₁σ₂⁻¹)³` whose closure is the Borromean rings.
pub fn borromean_braid() -> BraidWord {
    BraidWord::new(3, &[1, -2, 1, -2, 1, -2]).expect("valid word")
}

/// Closure of `σ₁^(2s+1)`, the `(2, 2s+1)` torus knot.
pub fn torus_knot_2(s: usize) -> KnotDiagram {
    BraidWord::new(2, &vec![1; 2 * s + 1])
        .and_then(|b| b.closure_knot())
        .expect("torus closure is a knot")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn borromean_braid_is_pure_with_three_components() {
        let b = borromean_braid();
        assert!(b.is_pure());
        assert_eq!(b.closure().len(), 3);
        let (cs, _) = b.crossings();
        // every pair of strands crosses with zero total sign
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            let total: i32 = cs
                .iter()
                .filter(|c| (c.over == x && c.under == y) || (c.over == y && c.under == x))
                .map(|c| c.sign as i32)
                .sum();
            assert_eq!(total, 0);
        }
    }

    #[test]
    fn torus_closure_shapes() {
        let k = torus_knot_2(1);
        assert_eq!(k.crossing_count(), 3);
        assert_eq!(k.writhe(), 3);
        let l = BraidWord::new(2, &[1, 1, 1, 1]).unwrap().closure_link().unwrap();
        assert_eq!(l.inter_component().len(), 4);
        assert!(BraidWord::new(2, &[2]).is_err());
        assert!(BraidWord::new(2, &[1, 1]).unwrap().closure_knot().is_err());
    }

    #[test]
    fn inverse_cancels() {
        let b = borromean_braid();
        let mut w = b.letters().to_vec();
        w.extend_from_slice(b.inverse().letters());
        let word = BraidWord { strands: 3, letters: w };
        assert!(word.is_pure());
        assert_eq!(b.mirror().mirror(), b);
    }
}
