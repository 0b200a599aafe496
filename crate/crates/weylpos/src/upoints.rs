//! Points of the unipotent semigroup over a semifield, stored as one chart.
//!
//! A point is a coordinate vector tied to a reduced word of the longest
//! element; the full coherent family over all reduced words is recovered on
//! demand by braid-move transitions. All maps here (transition, the
//! anti-automorphism `psi`, rescaling, the `T` operators, multiplication)
//! are built from semifield operations only.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::semifields::{Semifield, TropInt};
use crate::weyl::{Move, MoveKind, WeylData};
use crate::{Error, Result};

/// One braid move applied to a coordinate window.
///
/// A 2-move swaps two commuting coordinates. A 3-move sends `(a, b, c)` to
/// `(bc/(a+c), a+c, ab/(a+c))` in the semifield; it is involutive.
pub fn braid_move<K: Semifield>(kind: MoveKind, window: &[K]) -> Result<Vec<K>> {
    match (kind, window) {
        (MoveKind::Two, [a, b]) => Ok(vec![b.clone(), a.clone()]),
        (MoveKind::Three, [a, b, c]) => {
            let s = a.add(c);
            Ok(vec![b.mul(c).div(&s), s.clone(), a.mul(b).div(&s)])
        }
        _ => Err(Error::BadWindow(window.len())),
    }
}

fn apply_move<K: Semifield>(word: &mut [u8], coords: &mut [K], m: Move) {
    match m.kind {
        MoveKind::Two => {
            word.swap(m.pos, m.pos + 1);
            coords.swap(m.pos, m.pos + 1);
        }
        MoveKind::Three => {
            let (a, b) = (word[m.pos], word[m.pos + 1]);
            word[m.pos] = b;
            word[m.pos + 1] = a;
            word[m.pos + 2] = b;
            let s = coords[m.pos].add(&coords[m.pos + 2]);
            let first = coords[m.pos + 1].mul(&coords[m.pos + 2]).div(&s);
            let last = coords[m.pos].mul(&coords[m.pos + 1]).div(&s);
            coords[m.pos] = first;
            coords[m.pos + 1] = s;
            coords[m.pos + 2] = last;
        }
    }
}

/// Applies a move sequence to raw word/coordinate buffers.
pub fn apply_moves<K: Semifield>(word: &mut [u8], coords: &mut [K], moves: &[Move]) {
    for &m in moves {
        apply_move(word, coords, m);
    }
}

/// A rescaling vector, one semifield value per vertex.
pub type Scaling<K> = Vec<K>;

/// A point of the unipotent semigroup over `K`, in a single chart.
#[derive(Debug, Clone)]
pub struct UPoint<K: Semifield> {
    weyl: Arc<WeylData>,
    word: Vec<u8>,
    coords: Vec<K>,
}

impl<K: Semifield> UPoint<K> {
    pub fn new(weyl: Arc<WeylData>, word: Vec<u8>, coords: Vec<K>) -> Result<Self> {
        if !weyl.is_reduced_for_w0(&word) {
            return Err(Error::NotLongest);
        }
        if coords.len() != word.len() {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                word.len(),
                coords.len()
            )));
        }
        Ok(UPoint { weyl, word, coords })
    }

    /// The point in the canonical chart with the given coordinates.
    pub fn in_canonical_chart(weyl: Arc<WeylData>, coords: Vec<K>) -> Result<Self> {
        let word = weyl.canonical_word().to_vec();
        UPoint::new(weyl, word, coords)
    }

    pub fn weyl(&self) -> &Arc<WeylData> {
        &self.weyl
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn coords(&self) -> &[K] {
        &self.coords
    }

    fn same_diagram(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.weyl, &other.weyl)
            || self.weyl.diagram().graph() == other.weyl.diagram().graph()
    }

    /// Moves the point to another chart along a braid path.
    pub fn transition(&self, target: &[u8]) -> Result<Self> {
        if self.word == target {
            return Ok(self.clone());
        }
        if !self.weyl.is_reduced_for_w0(target) {
            return Err(Error::NotLongest);
        }
        let path = self.weyl.braid_path(&self.word, target)?;
        let mut word = self.word.clone();
        let mut coords = self.coords.clone();
        apply_moves(&mut word, &mut coords, &path);
        debug_assert_eq!(word.as_slice(), target);
        Ok(UPoint {
            weyl: self.weyl.clone(),
            word,
            coords,
        })
    }

    /// The anti-automorphism: coordinates reversed in the reversed word.
    pub fn psi(&self) -> Self {
        UPoint {
            weyl: self.weyl.clone(),
            word: self.word.iter().rev().copied().collect(),
            coords: self.coords.iter().rev().cloned().collect(),
        }
    }

    /// Rescales coordinate `k` by `p` at the letter in position `k`.
    pub fn scale(&self, p: &Scaling<K>) -> Result<Self> {
        if p.len() != self.weyl.rank() {
            return Err(Error::Parse(format!(
                "scaling vector needs {} entries, got {}",
                self.weyl.rank(),
                p.len()
            )));
        }
        let coords = self
            .word
            .iter()
            .zip(&self.coords)
            .map(|(&i, c)| c.mul(&p[i as usize]))
            .collect();
        Ok(UPoint {
            weyl: self.weyl.clone(),
            word: self.word.clone(),
            coords,
        })
    }

    /// Multiplies the first coordinate by `c` in a chart starting with `i`.
    pub fn t_op(&self, i: u8, c: &K) -> Result<Self> {
        let target = self.weyl.word_starting_with(i).to_vec();
        let mut moved = self.transition(&target)?;
        moved.coords[0] = moved.coords[0].mul(c);
        Ok(moved)
    }

    /// Last coordinate in a chart ending with `i`; chart-independent.
    pub fn z_coord(&self, i: u8) -> Result<K> {
        let target = self.weyl.word_ending_in(i).to_vec();
        let moved = self.transition(&target)?;
        Ok(moved.coords.last().expect("nonempty word").clone())
    }

    /// Right-multiplication by the generator `i^a`: move to a chart ending
    /// in `i` and add `a` to the last coordinate.
    pub fn mul_generator(&self, i: u8, a: &K) -> Result<Self> {
        let target = self.weyl.word_ending_in(i).to_vec();
        let mut moved = self.transition(&target)?;
        let last = moved.coords.last_mut().expect("nonempty word");
        *last = last.add(a);
        Ok(moved)
    }

    /// Semigroup product, absorbing the right factor one generator at a
    /// time through charts ending in the matching letter.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if !self.same_diagram(other) {
            return Err(Error::DiagramMismatch);
        }
        let mut acc = self.clone();
        for (&i, c) in other.word.iter().zip(&other.coords) {
            acc = acc.mul_generator(i, c)?;
        }
        Ok(acc)
    }

    /// Compares two points after moving them to a common chart.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        if !self.same_diagram(other) {
            return Ok(false);
        }
        if self.word == other.word {
            return Ok(self.coords == other.coords);
        }
        Ok(other.transition(&self.word)?.coords == self.coords)
    }

    pub fn to_json(&self) -> Value {
        let names: Vec<&str> = self
            .word
            .iter()
            .map(|&i| self.weyl.diagram().graph().vertices()[i as usize].as_str())
            .collect();
        json!({
            "word": names,
            "coords": self.coords.iter().map(K::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(weyl: Arc<WeylData>, v: &Value) -> Result<Self> {
        let words = v
            .get("word")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `word` array".into()))?;
        let word: Vec<u8> = words
            .iter()
            .map(|w| {
                let name = w
                    .as_str()
                    .ok_or_else(|| Error::Parse("word letters must be strings".into()))?;
                Ok(weyl.diagram().graph().vertex_index(name)? as u8)
            })
            .collect::<Result<_>>()?;
        let coords = v
            .get("coords")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `coords` array".into()))?
            .iter()
            .map(K::from_json)
            .collect::<Result<_>>()?;
        UPoint::new(weyl, word, coords)
    }
}

impl<K: Semifield> PartialEq for UPoint<K> {
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other)
            .expect("point equality requires the braid graph of this rank")
    }
}

/// The distinguished point whose coordinates are the heights of the partial
/// reflection images along any reduced word.
pub fn u_one<K: Semifield>(weyl: &Arc<WeylData>) -> UPoint<K> {
    let word = weyl.canonical_word().to_vec();
    let data = weyl
        .root_data(&word)
        .expect("canonical word is reduced for w0");
    let coords = data.rprime.iter().map(|&h| K::from_posint(h)).collect();
    UPoint {
        weyl: weyl.clone(),
        word,
        coords,
    }
}

/// `u(p)`: the rescaling of `u(1)` by `p`.
pub fn u_p<K: Semifield>(weyl: &Arc<WeylData>, p: &Scaling<K>) -> Result<UPoint<K>> {
    u_one(weyl).scale(p)
}

impl UPoint<TropInt> {
    /// Integrality: all coordinates nonnegative in this chart. Nonnegativity
    /// transports across charts, which the test suite re-verifies on boxes.
    pub fn is_in_u_n(&self) -> bool {
        self.coords.iter().all(|c| c.0 >= 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Diagram;
    use crate::semifields::PosRat;

    fn weyl(name: &str) -> Arc<WeylData> {
        WeylData::new(Diagram::named(name).unwrap()).unwrap()
    }

    fn pr(n: i64, d: i64) -> PosRat {
        PosRat::from_ints(n, d).unwrap()
    }

    fn pr_point(w: &Arc<WeylData>, word: &[u8], coords: &[(i64, i64)]) -> UPoint<PosRat> {
        UPoint::new(
            w.clone(),
            word.to_vec(),
            coords.iter().map(|&(n, d)| pr(n, d)).collect(),
        )
        .unwrap()
    }

    fn trop_point(w: &Arc<WeylData>, word: &[u8], coords: &[i64]) -> UPoint<TropInt> {
        UPoint::new(
            w.clone(),
            word.to_vec(),
            coords.iter().map(|&c| TropInt(c)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn braid_move_windows() {
        let out = braid_move(MoveKind::Three, &[pr(1, 1), pr(1, 1), pr(1, 1)]).unwrap();
        assert_eq!(out, vec![pr(1, 2), pr(2, 1), pr(1, 2)]);

        let out = braid_move(MoveKind::Three, &[TropInt(1), TropInt(2), TropInt(3)]).unwrap();
        assert_eq!(out, vec![TropInt(4), TropInt(1), TropInt(2)]);

        let zero = [TropInt(0), TropInt(0), TropInt(0)];
        assert_eq!(braid_move(MoveKind::Three, &zero).unwrap(), zero.to_vec());

        assert!(braid_move(MoveKind::Three, &[TropInt(1)]).is_err());
        assert!(braid_move::<TropInt>(MoveKind::Two, &[]).is_err());
    }

    #[test]
    fn transition_examples() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 1), (1, 1), (1, 1)]);
        let y = x.transition(&[1, 0, 1]).unwrap();
        assert_eq!(y.coords(), &[pr(1, 2), pr(2, 1), pr(1, 2)]);

        let t = trop_point(&a2, &[0, 1, 0], &[1, 2, 3]);
        let u = t.transition(&[1, 0, 1]).unwrap();
        assert_eq!(u.coords(), &[TropInt(4), TropInt(1), TropInt(2)]);

        let same = t.transition(&[0, 1, 0]).unwrap();
        assert_eq!(same.coords(), t.coords());
    }

    #[test]
    fn transition_round_trips_exactly() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(3, 7), (22, 5), (1, 9)]);
        let back = x.transition(&[1, 0, 1]).unwrap().transition(&[0, 1, 0]).unwrap();
        assert_eq!(back.coords(), x.coords());
    }

    #[test]
    fn transition_path_independence_on_a3() {
        let a3 = weyl("A3");
        let words = a3.reduced_words().unwrap().to_vec();
        let x = pr_point(&a3, a3.canonical_word(), &[(1, 2), (3, 1), (5, 7), (2, 3), (1, 1), (4, 9)]);
        for target in &words {
            let direct = x.transition(target).unwrap();
            for mid in words.iter().step_by(5) {
                let via = x.transition(mid).unwrap().transition(target).unwrap();
                assert_eq!(via.coords(), direct.coords());
            }
        }
    }

    #[test]
    fn psi_examples() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(2, 1), (3, 1), (5, 1)]);
        let y = x.psi().transition(&[0, 1, 0]).unwrap();
        assert_eq!(y.coords(), &[pr(5, 1), pr(3, 1), pr(2, 1)]);

        let a1 = weyl("A1");
        let x = pr_point(&a1, &[0], &[(7, 2)]);
        assert_eq!(x.psi().coords(), x.coords());

        let prod = weyl("A1xA1");
        let x = pr_point(&prod, &[0, 1], &[(2, 1), (3, 1)]);
        let y = x.psi().transition(&[0, 1]).unwrap();
        assert_eq!(y.coords(), x.coords());
    }

    #[test]
    fn psi_is_involutive_and_antimultiplicative() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 3), (2, 1), (5, 4)]);
        let y = pr_point(&a2, &[0, 1, 0], &[(2, 7), (1, 1), (3, 2)]);
        assert!(x.psi().psi().try_eq(&x).unwrap());
        let lhs = x.product(&y).unwrap().psi();
        let rhs = y.psi().product(&x.psi()).unwrap();
        assert!(lhs.try_eq(&rhs).unwrap());
    }

    #[test]
    fn scale_examples() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 1), (2, 1), (3, 1)]);
        let p = vec![pr(5, 1), pr(7, 1)];
        let y = x.scale(&p).unwrap();
        assert_eq!(y.coords(), &[pr(5, 1), pr(14, 1), pr(15, 1)]);

        let t = trop_point(&a2, &[0, 1, 0], &[1, 2, 3]);
        let y = t.scale(&vec![TropInt(10), TropInt(-4)]).unwrap();
        assert_eq!(y.coords(), &[TropInt(11), TropInt(-2), TropInt(13)]);

        let ones = vec![PosRat::one(), PosRat::one()];
        assert_eq!(x.scale(&ones).unwrap().coords(), x.coords());
    }

    #[test]
    fn scale_is_chart_independent_and_composes() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 2), (4, 3), (5, 1)]);
        let p = vec![pr(2, 1), pr(1, 3)];
        let q = vec![pr(7, 2), pr(5, 1)];
        // Chart independence.
        let a = x.scale(&p).unwrap().transition(&[1, 0, 1]).unwrap();
        let b = x.transition(&[1, 0, 1]).unwrap().scale(&p).unwrap();
        assert_eq!(a.coords(), b.coords());
        // Composition.
        let pq: Vec<PosRat> = p.iter().zip(&q).map(|(a, b)| a.mul(b)).collect();
        assert!(x
            .scale(&p)
            .unwrap()
            .scale(&q)
            .unwrap()
            .try_eq(&x.scale(&pq).unwrap())
            .unwrap());
        // Commutes with psi.
        assert!(x
            .scale(&p)
            .unwrap()
            .psi()
            .try_eq(&x.psi().scale(&p).unwrap())
            .unwrap());
    }

    #[test]
    fn t_op_examples() {
        let a1 = weyl("A1");
        let x = pr_point(&a1, &[0], &[(3, 1)]);
        assert_eq!(x.t_op(0, &pr(2, 1)).unwrap().coords(), &[pr(6, 1)]);

        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 1), (1, 1), (1, 1)]);
        let y = x.t_op(0, &pr(2, 1)).unwrap().transition(&[0, 1, 0]).unwrap();
        assert_eq!(y.coords(), &[pr(2, 1), pr(1, 1), pr(1, 1)]);

        let t = trop_point(&a2, &[0, 1, 0], &[1, 2, 3]);
        let y = t.t_op(1, &TropInt(5)).unwrap();
        assert_eq!(y.word(), &[1, 0, 1]);
        assert_eq!(y.coords(), &[TropInt(9), TropInt(1), TropInt(2)]);
    }

    #[test]
    fn t_op_composes() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(2, 3), (7, 1), (1, 5)]);
        let a = x.t_op(1, &pr(2, 1)).unwrap().t_op(1, &pr(3, 1)).unwrap();
        let b = x.t_op(1, &pr(6, 1)).unwrap();
        assert!(a.try_eq(&b).unwrap());
    }

    #[test]
    fn u_one_examples() {
        let a2 = weyl("A2");
        let u: UPoint<PosRat> = u_one(&a2);
        assert_eq!(u.coords(), &[pr(1, 1), pr(2, 1), pr(1, 1)]);
        let ut: UPoint<TropInt> = u_one(&a2);
        assert_eq!(ut.coords(), &[TropInt(1), TropInt(2), TropInt(1)]);

        let a1 = weyl("A1");
        let u: UPoint<PosRat> = u_one(&a1);
        assert_eq!(u.coords(), &[pr(1, 1)]);
        let p = vec![pr(5, 3)];
        assert_eq!(u_p(&a1, &p).unwrap().coords(), &[pr(5, 3)]);
    }

    #[test]
    fn u_one_is_chart_independent() {
        let a3 = weyl("A3");
        let u: UPoint<PosRat> = u_one(&a3);
        for word in a3.reduced_words().unwrap() {
            let moved = u.transition(word).unwrap();
            let expected = a3.root_data(word).unwrap().rprime;
            let coords: Vec<PosRat> =
                expected.iter().map(|&h| PosRat::from_posint(h)).collect();
            assert_eq!(moved.coords(), coords.as_slice());
        }
    }

    #[test]
    fn product_examples() {
        let a1 = weyl("A1");
        let x = pr_point(&a1, &[0], &[(2, 1)]);
        let y = pr_point(&a1, &[0], &[(3, 1)]);
        assert_eq!(x.product(&y).unwrap().coords(), &[pr(5, 1)]);

        // u(1) * u(1) in rank 1.
        let u: UPoint<PosRat> = u_one(&a1);
        assert_eq!(u.product(&u).unwrap().coords(), &[pr(2, 1)]);

        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 1), (1, 1), (1, 1)]);
        let y = x.mul_generator(1, &pr(1, 1)).unwrap();
        assert_eq!(y.word(), &[1, 0, 1]);
        assert_eq!(y.coords(), &[pr(1, 2), pr(2, 1), pr(3, 2)]);
    }

    #[test]
    fn product_is_associative() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 2), (2, 1), (3, 1)]);
        let y = pr_point(&a2, &[1, 0, 1], &[(1, 1), (5, 2), (1, 3)]);
        let z = pr_point(&a2, &[0, 1, 0], &[(4, 1), (1, 7), (2, 5)]);
        let lhs = x.product(&y).unwrap().product(&z).unwrap();
        let rhs = x.product(&y.product(&z).unwrap()).unwrap();
        assert!(lhs.try_eq(&rhs).unwrap());
    }

    #[test]
    fn z_coord_examples() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(2, 1), (3, 1), (5, 1)]);
        assert_eq!(x.z_coord(0).unwrap(), pr(5, 1));

        let t = trop_point(&a2, &[0, 1, 0], &[1, 2, 3]);
        // Last coordinate of the (j,i,j) chart: a + b - min(a, c).
        assert_eq!(t.z_coord(1).unwrap(), TropInt(2));
        assert!(trop_point(&a2, &[0, 1, 0], &[0, 0, 0]).is_in_u_n());
        assert!(!trop_point(&a2, &[0, 1, 0], &[0, -1, 0]).is_in_u_n());
    }

    #[test]
    fn z_coord_is_chart_independent() {
        let a3 = weyl("A3");
        let x = pr_point(&a3, a3.canonical_word(), &[(1, 2), (3, 1), (5, 7), (2, 3), (1, 1), (4, 9)]);
        for word in a3.reduced_words().unwrap().iter().step_by(3) {
            let moved = x.transition(word).unwrap();
            for i in 0..3 {
                assert_eq!(moved.z_coord(i).unwrap(), x.z_coord(i).unwrap());
            }
        }
    }

    #[test]
    fn integrality_transports_on_a2_box() {
        let a2 = weyl("A2");
        for a in 0..=4 {
            for b in 0..=4 {
                for c in 0..=4 {
                    let t = trop_point(&a2, &[0, 1, 0], &[a, b, c]);
                    let moved = t.transition(&[1, 0, 1]).unwrap();
                    assert!(moved.is_in_u_n(), "({a},{b},{c}) left the integral cone");
                }
            }
        }
    }

    #[test]
    fn point_json_round_trip() {
        let a2 = weyl("A2");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 2), (2, 1), (3, 2)]);
        let j = x.to_json();
        let back = UPoint::<PosRat>::from_json(a2.clone(), &j).unwrap();
        assert_eq!(back.coords(), x.coords());
        assert_eq!(back.word(), x.word());
    }

    #[test]
    fn diagram_mismatch_is_an_error() {
        let a2 = weyl("A2");
        let a1 = weyl("A1");
        let x = pr_point(&a2, &[0, 1, 0], &[(1, 1), (1, 1), (1, 1)]);
        let y = pr_point(&a1, &[0], &[(1, 1)]);
        assert!(matches!(x.product(&y), Err(Error::DiagramMismatch)));
    }
}
