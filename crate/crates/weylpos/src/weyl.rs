//! The Weyl group of a diagram through its action on the coroot lattice.
//!
//! Group elements are stored as permutations of the finite root set, which
//! makes equality, composition, and length (the number of positive roots
//! sent negative) cheap and exact. On top of that sit the longest element,
//! its reduced words, the braid-move graph connecting them, the `!`
//! involution, and the per-word root data (the nonnegative matrix `r`,
//! the height vector `r'`, and the column sums `q`).

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::diagrams::Diagram;
use crate::{Error, Result};

/// Largest rank for which the full reduced-word set and braid-move graph
/// are enumerated. Beyond it only the root system, lengths, and canonical
/// words are available.
pub const WORD_ENUM_MAX_RANK: usize = 4;

/// A rational/integer vector in the coroot basis.
pub type CorootVector = Vec<i64>;

/// A not-necessarily-reduced word over the vertex set, by vertex index.
pub type WeylWord = Vec<u8>;

/// A braid move acting on a word at a given position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Move {
    pub kind: MoveKind,
    pub pos: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    /// Swap two commuting letters.
    Two,
    /// Rewrite the pattern (i, j, i) to (j, i, j) on an edge.
    Three,
}

/// Root data along a reduced word: `r[i][k]` are the coroot coordinates of
/// the k-th partial reflection image, `rprime[k]` its height, and `q[i]`
/// the row sums over the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData {
    pub r: Vec<Vec<u64>>,
    pub rprime: Vec<u64>,
    pub q: Vec<u64>,
}

/// Precomputed Weyl group data of a diagram.
#[derive(Debug)]
pub struct WeylData {
    diagram: Diagram,
    roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, u32>,
    positive: Vec<bool>,
    simple_perm: Vec<Vec<u32>>,
    nu: usize,
    canonical_word: Vec<u8>,
    word_ending_in: Vec<Vec<u8>>,
    word_starting_with: Vec<Vec<u8>>,
    bang: Vec<u8>,
    words: Option<WordGraph>,
    path_cache: Mutex<HashMap<(u32, u32), Arc<Vec<Move>>>>,
}

/// All reduced words of the longest element plus the move graph on them.
#[derive(Debug)]
struct WordGraph {
    words: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, u32>,
    /// Adjacency: (neighbor word, move that reaches it).
    edges: Vec<Vec<(u32, Move)>>,
}

impl WeylData {
    pub fn new(diagram: Diagram) -> Result<Arc<Self>> {
        let n = diagram.rank();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > 8 {
            return Err(Error::RankUnsupported {
                rank: n,
                feature: "root system construction",
            });
        }
        let cartan = diagram.cartan().clone();
        // Close the simple coroots under all simple reflections.
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut root_index: HashMap<Vec<i64>, u32> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            root_index.insert(v.clone(), roots.len() as u32);
            roots.push(v.clone());
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let w = reflect(&cartan, i, &v);
                if !root_index.contains_key(&w) {
                    root_index.insert(w.clone(), roots.len() as u32);
                    roots.push(w.clone());
                    queue.push_back(w);
                }
            }
        }
        let positive: Vec<bool> = roots.iter().map(|v| v.iter().all(|&x| x >= 0)).collect();
        let nu = positive.iter().filter(|&&p| p).count();
        debug_assert_eq!(nu * 2, roots.len());
        let simple_perm: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .map(|v| root_index[&reflect(&cartan, i, v)])
                    .collect()
            })
            .collect();

        let mut data = WeylData {
            diagram,
            roots,
            root_index,
            positive,
            simple_perm,
            nu,
            canonical_word: Vec::new(),
            word_ending_in: Vec::new(),
            word_starting_with: Vec::new(),
            bang: Vec::new(),
            words: None,
            path_cache: Mutex::new(HashMap::new()),
        };

        data.canonical_word = data.greedy_word_of(&data.longest())?;
        let w0 = data.longest();
        data.bang = (0..n as u8)
            .map(|i| {
                // w0 sends the simple coroot of i to minus the simple coroot
                // of i-bang.
                let img = w0.perm[data.simple_root_id(i) as usize];
                let neg = data.roots[img as usize].iter().map(|x| -x).collect::<Vec<_>>();
                let pos_id = data.root_index[&neg];
                data.roots[pos_id as usize]
                    .iter()
                    .position(|&x| x == 1)
                    .expect("image of a simple root under w0 is minus a simple root")
                    as u8
            })
            .collect();
        data.word_ending_in = (0..n as u8)
            .map(|i| -> Result<Vec<u8>> {
                let shorter = data.mul(&w0, &data.simple(i));
                let mut word = data.greedy_word_of(&shorter)?;
                word.push(i);
                Ok(word)
            })
            .collect::<Result<Vec<_>>>()?;
        data.word_starting_with = data
            .word_ending_in
            .iter()
            .map(|w| w.iter().rev().copied().collect())
            .collect();
        if n <= WORD_ENUM_MAX_RANK {
            data.words = Some(data.build_word_graph()?);
        }
        Ok(Arc::new(data))
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// Length of the longest element; the number of positive roots.
    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn canonical_word(&self) -> &[u8] {
        &self.canonical_word
    }

    pub fn word_ending_in(&self, i: u8) -> &[u8] {
        &self.word_ending_in[i as usize]
    }

    pub fn word_starting_with(&self, i: u8) -> &[u8] {
        &self.word_starting_with[i as usize]
    }

    /// The involution `i -> i!` with `w0 s_i w0 = s_{i!}`.
    pub fn bang(&self, i: u8) -> u8 {
        self.bang[i as usize]
    }

    /// Coordinates of all positive coroots.
    pub fn positive_roots(&self) -> Vec<&[i64]> {
        self.roots
            .iter()
            .zip(&self.positive)
            .filter(|(_, &p)| p)
            .map(|(r, _)| r.as_slice())
            .collect()
    }

    fn simple_root_id(&self, i: u8) -> u32 {
        let mut v = vec![0i64; self.rank()];
        v[i as usize] = 1;
        self.root_index[&v]
    }

    /// Identity element.
    pub fn identity(&self) -> Element {
        Element {
            perm: (0..self.roots.len() as u32).collect(),
        }
    }

    /// The simple reflection of vertex `i` as a group element.
    pub fn simple(&self, i: u8) -> Element {
        Element {
            perm: self.simple_perm[i as usize].clone(),
        }
    }

    /// Product `a * b`, acting on the right first: `(a b)(v) = a(b(v))`.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        Element {
            perm: b.perm.iter().map(|&r| a.perm[r as usize]).collect(),
        }
    }

    pub fn eval_word(&self, word: &[u8]) -> Element {
        let mut e = self.identity();
        for &i in word {
            e = self.mul(&e, &self.simple(i));
        }
        e
    }

    pub fn length(&self, e: &Element) -> usize {
        (0..self.roots.len())
            .filter(|&r| self.positive[r] && !self.positive[e.perm[r] as usize])
            .count()
    }

    pub fn is_reduced(&self, word: &[u8]) -> bool {
        self.length(&self.eval_word(word)) == word.len()
    }

    /// True when the word is a reduced expression of the longest element.
    pub fn is_reduced_for_w0(&self, word: &[u8]) -> bool {
        word.len() == self.nu && self.is_reduced(word)
    }

    /// The longest element, by greedy ascent (smallest index with an
    /// ascent at each step).
    pub fn longest(&self) -> Element {
        let mut w = self.identity();
        loop {
            // Ascent at i iff w sends the simple coroot of i to a positive root.
            let next = (0..self.rank() as u8)
                .find(|&i| self.positive[w.perm[self.simple_root_id(i) as usize] as usize]);
            match next {
                Some(i) => w = self.mul(&w, &self.simple(i)),
                None => return w,
            }
        }
    }

    /// Deterministic reduced word of the longest element (greedy ascent).
    pub fn longest_word(&self) -> (Vec<u8>, usize) {
        (self.canonical_word.clone(), self.nu)
    }

    /// Greedy reduced word of an arbitrary element via left descents.
    fn greedy_word_of(&self, e: &Element) -> Result<Vec<u8>> {
        let mut w = e.clone();
        let mut word = Vec::new();
        while self.length(&w) > 0 {
            let inv = w.inverse();
            let i = (0..self.rank() as u8)
                .find(|&i| !self.positive[inv.perm[self.simple_root_id(i) as usize] as usize])
                .ok_or(Error::NotReduced)?;
            word.push(i);
            w = self.mul(&self.simple(i), &w);
        }
        Ok(word)
    }

    /// Applies the simple reflection of `i` to an integer coroot vector.
    pub fn apply_reflection(&self, i: u8, v: &CorootVector) -> Result<CorootVector> {
        if i as usize >= self.rank() {
            return Err(Error::UnknownVertex(format!("#{i}")));
        }
        Ok(reflect(self.diagram.cartan(), i as usize, v))
    }

    /// Root data along a reduced word of the longest element.
    pub fn root_data(&self, word: &[u8]) -> Result<RootData> {
        if !self.is_reduced_for_w0(word) {
            return Err(Error::NotReduced);
        }
        let n = self.rank();
        let cartan = self.diagram.cartan();
        let mut r = vec![vec![0u64; word.len()]; n];
        let mut rprime = vec![0u64; word.len()];
        for k in 0..word.len() {
            let mut v = vec![0i64; n];
            v[word[k] as usize] = 1;
            for &i in word[..k].iter().rev() {
                v = reflect(cartan, i as usize, &v);
            }
            for (i, &x) in v.iter().enumerate() {
                if x < 0 {
                    return Err(Error::NotReduced);
                }
                r[i][k] = x as u64;
                rprime[k] += x as u64;
            }
        }
        let q: Vec<u64> = r.iter().map(|row| row.iter().sum()).collect();
        Ok(RootData { r, rprime, q })
    }

    /// All reduced words of the longest element (rank-gated).
    pub fn reduced_words(&self) -> Result<&[Vec<u8>]> {
        match &self.words {
            Some(w) => Ok(&w.words),
            None => Err(Error::RankUnsupported {
                rank: self.rank(),
                feature: "reduced word enumeration",
            }),
        }
    }

    fn build_word_graph(&self) -> Result<WordGraph> {
        // Enumerate words by peeling right descents, memoized per element.
        let mut memo: HashMap<Vec<u32>, Vec<Vec<u8>>> = HashMap::new();
        memo.insert(self.identity().perm, vec![Vec::new()]);
        let w0 = self.longest();
        let words = self.words_of(&w0, &mut memo);
        let index: HashMap<Vec<u8>, u32> = words
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k as u32))
            .collect();
        let cartan = self.diagram.cartan();
        let mut edges = vec![Vec::new(); words.len()];
        for (k, w) in words.iter().enumerate() {
            for pos in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[pos] as usize, w[pos + 1] as usize);
                if cartan.entry(a, b) == 0 && a != b {
                    let mut nw = w.clone();
                    nw.swap(pos, pos + 1);
                    let m = Move {
                        kind: MoveKind::Two,
                        pos,
                    };
                    edges[k].push((index[&nw], m));
                }
            }
            for pos in 0..w.len().saturating_sub(2) {
                let (a, b, c) = (w[pos], w[pos + 1], w[pos + 2]);
                if a == c && cartan.entry(a as usize, b as usize) == -1 {
                    let mut nw = w.clone();
                    nw[pos] = b;
                    nw[pos + 1] = a;
                    nw[pos + 2] = b;
                    let m = Move {
                        kind: MoveKind::Three,
                        pos,
                    };
                    edges[k].push((index[&nw], m));
                }
            }
        }
        Ok(WordGraph {
            words,
            index,
            edges,
        })
    }

    fn words_of(&self, e: &Element, memo: &mut HashMap<Vec<u32>, Vec<Vec<u8>>>) -> Vec<Vec<u8>> {
        if let Some(w) = memo.get(&e.perm) {
            return w.clone();
        }
        let mut out = Vec::new();
        for i in 0..self.rank() as u8 {
            // Right descent at i iff w(alpha_i) < 0.
            if !self.positive[e.perm[self.simple_root_id(i) as usize] as usize] {
                let shorter = self.mul(e, &self.simple(i));
                for mut w in self.words_of(&shorter, memo) {
                    w.push(i);
                    out.push(w);
                }
            }
        }
        out.sort();
        out.dedup();
        memo.insert(e.perm.clone(), out.clone());
        out
    }

    /// A sequence of braid moves transforming `from` into `to`, found by
    /// breadth-first search over the move graph; memoized per word pair.
    pub fn braid_path(&self, from: &[u8], to: &[u8]) -> Result<Arc<Vec<Move>>> {
        let graph = self.words.as_ref().ok_or(Error::RankUnsupported {
            rank: self.rank(),
            feature: "braid-move paths",
        })?;
        let a = *graph
            .index
            .get(from)
            .ok_or(Error::NotLongest)?;
        let b = *graph.index.get(to).ok_or(Error::NotLongest)?;
        if let Some(p) = self.path_cache.lock().unwrap().get(&(a, b)) {
            return Ok(p.clone());
        }
        let mut parent: Vec<Option<(u32, Move)>> = vec![None; graph.words.len()];
        let mut seen = vec![false; graph.words.len()];
        let mut queue = VecDeque::from([a]);
        seen[a as usize] = true;
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for &(w, m) in &graph.edges[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = Some((v, m));
                    queue.push_back(w);
                }
            }
        }
        if !seen[b as usize] {
            return Err(Error::NotLongest);
        }
        let mut path = Vec::new();
        let mut cur = b;
        while cur != a {
            let (prev, m) = parent[cur as usize].expect("BFS parents reach the source");
            path.push(m);
            cur = prev;
        }
        path.reverse();
        let arc = Arc::new(path);
        self.path_cache
            .lock()
            .unwrap()
            .insert((a, b), arc.clone());
        Ok(arc)
    }

    /// Applies a move to a word in place.
    pub fn apply_move_to_word(&self, word: &mut [u8], m: Move) {
        match m.kind {
            MoveKind::Two => word.swap(m.pos, m.pos + 1),
            MoveKind::Three => {
                let (a, b) = (word[m.pos], word[m.pos + 1]);
                word[m.pos] = b;
                word[m.pos + 1] = a;
                word[m.pos + 2] = b;
            }
        }
    }
}

/// A Weyl group element as a permutation of the root set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    perm: Vec<u32>,
}

impl Element {
    pub fn inverse(&self) -> Element {
        let mut perm = vec![0u32; self.perm.len()];
        for (k, &v) in self.perm.iter().enumerate() {
            perm[v as usize] = k as u32;
        }
        Element { perm }
    }
}

fn reflect(cartan: &crate::diagrams::CartanMatrix, i: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = (0..v.len()).map(|j| cartan.entry(i, j) * v[j]).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}
