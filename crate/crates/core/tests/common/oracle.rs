//! Brute-force word rewriting for the C̃n Coxeter system, independent of
//! the signed-permutation model: reduced words are found by exhausting
//! braid moves and deleting `ss` pairs.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Order of `s_i s_j` read off the C̃n diagram; `None` for the infinite
/// dihedral pair of rank one.
pub fn m(i: usize, j: usize, n: usize) -> Option<usize> {
    if i == j {
        return Some(1);
    }
    let (a, b) = (i.min(j), i.max(j));
    if n == 1 {
        return None;
    }
    if b - a >= 2 {
        Some(2)
    } else if a == 0 || b == n {
        Some(4)
    } else {
        Some(3)
    }
}

fn alternating(a: usize, b: usize, len: usize) -> Vec<usize> {
    (0..len).map(|k| if k % 2 == 0 { a } else { b }).collect()
}

/// Every word reachable from `word` by braid moves.
pub fn braid_class(word: &[usize], n: usize) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for a in 0..=n {
            for b in 0..=n {
                if a == b {
                    continue;
                }
                let Some(k) = m(a, b, n) else { continue };
                let lhs = alternating(a, b, k);
                let rhs = alternating(b, a, k);
                for p in 0..w.len().saturating_sub(k - 1) {
                    if w[p..p + k] == lhs[..] {
                        let mut v = w.clone();
                        v[p..p + k].copy_from_slice(&rhs);
                        if seen.insert(v.clone()) {
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
    }
    seen
}

pub struct Rewriter {
    pub n: usize,
    cache: HashMap<Vec<usize>, Vec<usize>>,
}

impl Rewriter {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            cache: HashMap::new(),
        }
    }

    /// Lexicographically least reduced word of the element `word` spells.
    pub fn normal_form(&mut self, word: &[usize]) -> Vec<usize> {
        if let Some(v) = self.cache.get(word) {
            return v.clone();
        }
        let mut w = word.to_vec();
        let result = 'outer: loop {
            let class = braid_class(&w, self.n);
            for v in &class {
                if let Some(p) = v.windows(2).position(|x| x[0] == x[1]) {
                    let mut shorter = v.clone();
                    shorter.drain(p..p + 2);
                    w = shorter;
                    continue 'outer;
                }
            }
            break class.into_iter().next().unwrap();
        };
        self.cache.insert(word.to_vec(), result.clone());
        result
    }

    /// All reduced words of the element `word` spells.
    pub fn reduced_words(&mut self, word: &[usize]) -> BTreeSet<Vec<usize>> {
        let nf = self.normal_form(word);
        braid_class(&nf, self.n)
    }

    /// Whether some reduced word of the (reduced) `word` starts with `s`.
    pub fn is_left_descent(&mut self, word: &[usize], s: usize) -> bool {
        self.reduced_words(word).iter().any(|v| v.first() == Some(&s))
    }

    pub fn length(&mut self, word: &[usize]) -> usize {
        self.normal_form(word).len()
    }
}

/// A Laurent polynomial as exponent → coefficient.
pub type Poly = BTreeMap<i32, i64>;

fn add_into(p: &mut Poly, e: i32, c: i64) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

/// Hecke algebra elements keyed by normal-form words.
pub type HeckeO = BTreeMap<Vec<usize>, Poly>;

fn add_term(h: &mut HeckeO, w: Vec<usize>, p: &Poly, shift: i32, scale: i64) {
    let entry = h.entry(w.clone()).or_default();
    for (e, c) in p {
        add_into(entry, e + shift, c * scale);
    }
    if entry.is_empty() {
        h.remove(&w);
    }
}

/// `T_s · h` from the quadratic relation `(T_s - q_s)(T_s + 1) = 0` with
/// `q_0 = 1`, `q_s = q` otherwise.
pub fn left_mul(rw: &mut Rewriter, s: usize, h: &HeckeO) -> HeckeO {
    let mut out = HeckeO::new();
    for (w, c) in h {
        if s != 0 && rw.is_left_descent(w, s) {
            let start = rw
                .reduced_words(w)
                .into_iter()
                .find(|v| v[0] == s)
                .unwrap();
            let rest = rw.normal_form(&start[1..]);
            add_term(&mut out, rest, c, 1, 1);
            add_term(&mut out, w.clone(), c, 1, 1);
            add_term(&mut out, w.clone(), c, 0, -1);
        } else {
            let mut v = vec![s];
            v.extend_from_slice(w);
            let nf = rw.normal_form(&v);
            add_term(&mut out, nf, c, 0, 1);
        }
    }
    out
}

/// `T_{g_1} T_{g_2} ⋯ T_{g_k}`.
pub fn generator_product(rw: &mut Rewriter, gens: &[usize]) -> HeckeO {
    let mut h = HeckeO::from([(Vec::new(), Poly::from([(0, 1)]))]);
    for &s in gens.iter().rev() {
        h = left_mul(rw, s, &h);
    }
    h
}

/// `T_s^{-1} · h`, using `T_0^{-1} = T_0` and
/// `T_s^{-1} = q^{-1} T_s + (q^{-1} - 1)` otherwise.
pub fn left_mul_inverse(rw: &mut Rewriter, s: usize, h: &HeckeO) -> HeckeO {
    let t = left_mul(rw, s, h);
    if s == 0 {
        return t;
    }
    let mut out = HeckeO::new();
    for (w, c) in &t {
        add_term(&mut out, w.clone(), c, -1, 1);
    }
    for (w, c) in h {
        add_term(&mut out, w.clone(), c, -1, 1);
        add_term(&mut out, w.clone(), c, 0, -1);
    }
    out
}

/// Rewrites `Σ c_w T_w` in `H ⊗_{H_J} χ`: peels generators of `J` off the
/// right end of reduced words, collecting their eigenvalues.
pub fn reduce_mod_parabolic(
    rw: &mut Rewriter,
    h: &HeckeO,
    values: &BTreeMap<usize, Poly>,
) -> HeckeO {
    let mut out = HeckeO::new();
    for (w, c) in h {
        let mut cur = w.clone();
        let mut coeff = c.clone();
        loop {
            let hit = rw
                .reduced_words(&cur)
                .into_iter()
                .find_map(|v| v.last().filter(|j| values.contains_key(j)).map(|&j| (v.clone(), j)));
            let Some((v, j)) = hit else { break };
            cur = rw.normal_form(&v[..v.len() - 1]);
            coeff = mul_poly(&coeff, &values[&j]);
        }
        add_term(&mut out, cur, &coeff, 0, 1);
    }
    out
}

pub fn mul_poly(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (e, c) in a {
        for (f, d) in b {
            add_into(&mut out, e + f, c * d);
        }
    }
    out
}
