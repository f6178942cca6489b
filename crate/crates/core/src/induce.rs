//! Induced modules `H ⊗_{H_J} χ` in the basis `{T_w ⊗ 1}` indexed by
//! minimal-length representatives of the cosets `w W_J`.

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::{
    accumulate, theta_ops, times_q_minus_one, times_qinv_minus_one, Character, Domain, Element,
    GenOp, ParabolicLabel,
};
use crate::laurent::{Laurent, Matrix};
use crate::scalar::Coefficient;
use crate::weyl::{ball, ExtAffineWeylElement, Parabolic, Word};

/// A vector `Σ c_w (T_w ⊗ 1)` over minimal coset representatives.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector<C> {
    rank: usize,
    terms: FxHashMap<ExtAffineWeylElement, Laurent<C>>,
}

impl<C: Coefficient> Vector<C> {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: FxHashMap::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &ExtAffineWeylElement) -> Laurent<C> {
        self.terms.get(w).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExtAffineWeylElement, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, a) in &self.terms {
            accumulate(&mut out.terms, w.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        out
    }

    /// Terms ordered by length, then canonical reduced word.
    pub fn sorted_terms(&self) -> Vec<(ExtAffineWeylElement, Laurent<C>)> {
        let mut keyed: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| (basis_key(w), w.clone(), c.clone()))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(|w| w.length()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(w, c)| serde_json::json!({"rep": w, "coefficient": c.to_json()}))
                .collect(),
        )
    }
}

impl<C: Coefficient> std::fmt::Debug for Vector<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|(w, c)| format!("({c})*{}", w.reduced_word()))
            .collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

/// Sort key for basis elements: length, then canonical word.
pub fn basis_key(w: &ExtAffineWeylElement) -> (usize, Word) {
    (w.length(), w.reduced_word())
}

/// `H ⊗_{H_J} χ` for a character `χ` of a maximal finite parabolic
/// subalgebra.
#[derive(Clone)]
pub struct Module<C> {
    label: ParabolicLabel,
    parabolic: Parabolic,
    character: Character<C>,
}

impl<C: Coefficient> Module<C> {
    pub fn new(character: Character<C>) -> Result<Self> {
        let Domain::Parabolic(label) = character.domain() else {
            return Err(Error::OutsideCharacterDomain(
                "induction needs a character of a parabolic subalgebra".into(),
            ));
        };
        Ok(Self {
            label,
            parabolic: label.parabolic(character.rank()),
            character,
        })
    }

    /// The four modules `(H_n, sgn')`, `(H_n, sgn)`, `(H_0, ε^+)`,
    /// `(H_0, ε^-)`.
    pub fn standard_four(rank: usize) -> Vec<Self> {
        [
            Character::sgn_prime(rank),
            Character::sgn(rank),
            Character::epsilon(rank, true),
            Character::epsilon(rank, false),
        ]
        .into_iter()
        .map(|c| Self::new(c).expect("parabolic character"))
        .collect()
    }

    pub fn rank(&self) -> usize {
        self.character.rank()
    }

    pub fn label(&self) -> ParabolicLabel {
        self.label
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn character(&self) -> &Character<C> {
        &self.character
    }

    /// `T_e ⊗ 1`.
    pub fn generator_vector(&self) -> Vector<C> {
        let mut v = Vector::zero(self.rank());
        v.terms
            .insert(ExtAffineWeylElement::identity(self.rank()), Laurent::one());
        v
    }

    /// Minimal representative of `w W_J` and `χ(T_tail)` for `w = rep · tail`.
    fn reduce_term(&self, w: &ExtAffineWeylElement) -> (ExtAffineWeylElement, Laurent<C>) {
        let mut rep = w.clone();
        let mut value = Laurent::one();
        loop {
            let inv = rep.inverse();
            match self
                .parabolic
                .generators()
                .iter()
                .find(|&&j| inv.is_left_descent(j))
            {
                Some(&j) => {
                    rep = rep.right_mul_generator(j);
                    value = &value * self.character.value(j).expect("j lies in the domain");
                }
                None => return (rep, value),
            }
        }
    }

    /// `T_w ⊗ 1` written in the minimal-representative basis.
    pub fn reduce_basis(&self, w: &ExtAffineWeylElement) -> Vector<C> {
        let (rep, value) = self.reduce_term(w);
        let mut v = Vector::zero(self.rank());
        accumulate(&mut v.terms, rep, value);
        v
    }

    /// `Σ c_w (T_w ⊗ 1)` for arbitrary `w`.
    pub fn reduce_element(&self, h: &Element<C>) -> Vector<C> {
        let mut v = Vector::zero(self.rank());
        for (w, c) in h.iter() {
            let (rep, value) = self.reduce_term(w);
            accumulate(&mut v.terms, rep, &value * c);
        }
        v
    }

    /// `T_{s_i} · v`.
    pub fn act_generator(&self, i: usize, v: &Vector<C>) -> Vector<C> {
        let mut out = FxHashMap::default();
        for (w, c) in &v.terms {
            if i != 0 && w.is_left_descent(i) {
                accumulate(&mut out, w.left_mul_generator(i), c.shift(1));
                accumulate(&mut out, w.clone(), times_q_minus_one(c));
            } else {
                let (rep, value) = self.reduce_term(&w.left_mul_generator(i));
                accumulate(&mut out, rep, &value * c);
            }
        }
        Vector {
            rank: v.rank,
            terms: out,
        }
    }

    /// `T_{s_i}^{-1} · v`.
    pub fn act_generator_inverse(&self, i: usize, v: &Vector<C>) -> Vector<C> {
        if i == 0 {
            return self.act_generator(0, v);
        }
        let mut out = FxHashMap::default();
        for (w, c) in &v.terms {
            if w.is_left_descent(i) {
                accumulate(&mut out, w.left_mul_generator(i), c.clone());
            } else {
                let (rep, value) = self.reduce_term(&w.left_mul_generator(i));
                accumulate(&mut out, rep, (&value * c).shift(-1));
                accumulate(&mut out, w.clone(), times_qinv_minus_one(c));
            }
        }
        Vector {
            rank: v.rank,
            terms: out,
        }
    }

    /// Applies generator factors, first element first.
    pub fn act_ops(&self, ops: &[GenOp], v: &Vector<C>) -> Vector<C> {
        ops.iter().fold(v.clone(), |acc, op| {
            if op.inverse {
                self.act_generator_inverse(op.index, &acc)
            } else {
                self.act_generator(op.index, &acc)
            }
        })
    }

    /// `h · v`, computed by lifting `v` to `H`, multiplying and reducing.
    pub fn act(&self, h: &Element<C>, v: &Vector<C>) -> Result<Vector<C>> {
        if h.rank() != v.rank() {
            return Err(Error::RankMismatch {
                left: h.rank(),
                right: v.rank(),
            });
        }
        let lift = Element::from_terms(v.rank(), v.terms.iter().map(|(w, c)| (w.clone(), c.clone())));
        Ok(self.reduce_element(&h.multiply(&lift)?))
    }

    /// `θ_λ · v`, applying the factors of `θ_λ` one generator at a time.
    pub fn act_theta(&self, lambda: &[i32], v: &Vector<C>) -> Vector<C> {
        self.act_ops(&theta_ops(lambda), v)
    }

    /// Minimal representatives of length at most `max_length`, ordered by
    /// length then canonical word.
    pub fn minimal_reps(&self, max_length: usize) -> Vec<ExtAffineWeylElement> {
        ball(self.rank(), max_length)
            .into_iter()
            .filter(|w| self.parabolic.is_minimal(w))
            .collect()
    }

    /// Matrix of `T_{s_i}` on the span of `{T_w ⊗ 1 : w ∈ window}`. Column
    /// `k` holds the image of the `k`-th window element; columns whose image
    /// leaves the window are flagged partial.
    pub fn action_matrix(
        &self,
        i: usize,
        window: &[ExtAffineWeylElement],
    ) -> Result<ActionMatrix<C>> {
        if i > self.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        let mut window: Vec<_> = window.to_vec();
        for w in &window {
            if w.rank() != self.rank() || !self.parabolic.is_minimal(w) {
                return Err(Error::Parse(format!("{w} is not a minimal representative")));
            }
        }
        window.sort_by_key(basis_key);
        window.dedup();
        let index: FxHashMap<_, _> = window.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut matrix = Matrix::zeros(window.len(), window.len());
        let mut partial = vec![false; window.len()];
        for (k, w) in window.iter().enumerate() {
            let mut v = Vector::zero(self.rank());
            v.terms.insert(w.clone(), Laurent::one());
            let image = self.act_generator(i, &v);
            for (u, c) in image.iter() {
                match index.get(u) {
                    Some(&r) => matrix.set(r, k, c.clone()),
                    None => partial[k] = true,
                }
            }
        }
        Ok(ActionMatrix {
            window,
            matrix,
            partial,
        })
    }

    /// `dim Hom_H(H ⊗_{H_J} χ, χ_full)` by Frobenius reciprocity: 1 iff
    /// `χ_full` restricts to `χ` on the generators of `J`.
    pub fn hom_dim_to_character(&self, full: &Character<C>) -> Result<usize> {
        if full.domain() != Domain::Full || full.rank() != self.rank() {
            return Err(Error::OutsideCharacterDomain(format!(
                "{} is not a character of the full algebra of rank {}",
                full.name(),
                self.rank()
            )));
        }
        Ok(usize::from(self.character.agrees_with(full)))
    }

    /// Window certificate that `{θ_λ · (T_e ⊗ 1) : λ ∈ box}` is free over
    /// the Bernstein subalgebra.
    pub fn freeness_witness(
        &self,
        lambdas: &[Vec<i32>],
        length_bound: usize,
    ) -> Result<FreenessReport> {
        let gen = self.generator_vector();
        let vectors: Vec<Vector<C>> = lambdas
            .iter()
            .map(|l| {
                if l.len() != self.rank() {
                    return Err(Error::RankMismatch {
                        left: self.rank(),
                        right: l.len(),
                    });
                }
                Ok(self.act_theta(l, &gen))
            })
            .collect::<Result<_>>()?;
        let required = vectors.iter().map(Vector::max_length).max().unwrap_or(0);
        if required > length_bound {
            return Err(Error::InsufficientLengthBound {
                given: length_bound,
                required,
            });
        }

        let mut columns: Vec<ExtAffineWeylElement> = vectors
            .iter()
            .flat_map(|v| v.terms.keys().cloned())
            .collect::<FxHashSet<_>>()
            .into_iter()
            .collect();
        columns.sort_by_cached_key(basis_key);
        let col_index: FxHashMap<_, _> =
            columns.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut matrix = Matrix::<C>::zeros(vectors.len(), columns.len());
        for (r, v) in vectors.iter().enumerate() {
            for (w, c) in v.iter() {
                matrix.set(r, col_index[w], c.clone());
            }
        }
        let cert = matrix.rank_certified(0x5eed ^ (lambdas.len() as u64));

        let mut leading_map = Vec::new();
        let mut failures = Vec::new();
        for (lambda, v) in lambdas.iter().zip(&vectors) {
            let top = v.max_length();
            let tops: Vec<_> = v.iter().filter(|(w, _)| w.length() == top).collect();
            if tops.len() != 1 {
                failures.push(format!(
                    "lambda {lambda:?}: {} support elements of maximal length {top}",
                    tops.len()
                ));
                leading_map.push(LeadingEntry {
                    lambda: lambda.clone(),
                    rep: None,
                    coeff: None,
                    unit: false,
                });
                continue;
            }
            let (w, c) = tops[0];
            leading_map.push(LeadingEntry {
                lambda: lambda.clone(),
                rep: Some(w.clone()),
                coeff: Some(c.to_json()),
                unit: c.is_unit(),
            });
        }
        let reps: Vec<_> = leading_map.iter().filter_map(|e| e.rep.clone()).collect();
        let distinct: FxHashSet<_> = reps.iter().collect();
        let leading_injective = failures.is_empty() && distinct.len() == reps.len();
        let leading_units = leading_map.iter().all(|e| e.unit);
        if !leading_injective && failures.is_empty() {
            failures.push("leading representatives are not pairwise distinct".into());
        }
        if !leading_units {
            failures.push("a leading coefficient is not of the form ±q^k".into());
        }
        if cert.rank != lambdas.len() {
            failures.push(format!("rank {} < {}", cert.rank, lambdas.len()));
        }
        if !cert.certified {
            failures.push(format!(
                "rank certification failed at points {:?}: {:?}",
                cert.points, cert.evaluated_ranks
            ));
        }
        Ok(FreenessReport {
            module: ModuleDescriptor::of(self),
            lambdas: lambdas.to_vec(),
            rank: cert.rank,
            expected_rank: lambdas.len(),
            columns: columns.len(),
            leading_map,
            leading_injective,
            leading_units,
            rank_certified: cert.certified,
            certification_points: cert.points,
            length_bound,
            required_length: required,
            pass: failures.is_empty(),
            failures,
        })
    }
}

impl<C: Coefficient> std::fmt::Debug for Module<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H ⊗_{{{}}} {:?}", self.label.name(), self.character)
    }
}

/// Matrix of a generator on a window of the minimal-representative basis.
#[derive(Clone)]
pub struct ActionMatrix<C> {
    pub window: Vec<ExtAffineWeylElement>,
    pub matrix: Matrix<C>,
    pub partial: Vec<bool>,
}

impl<C: Coefficient> ActionMatrix<C> {
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<serde_json::Value>> = (0..self.matrix.rows())
            .map(|r| self.matrix.row(r).iter().map(Laurent::to_json).collect())
            .collect();
        serde_json::json!({
            "window": self.window,
            "matrix": rows,
            "partial": self.partial,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleDescriptor {
    #[serde(rename = "J")]
    pub generators: Vec<usize>,
    pub subalgebra: &'static str,
    pub character: String,
}

impl ModuleDescriptor {
    pub fn of<C: Coefficient>(m: &Module<C>) -> Self {
        Self {
            generators: m.parabolic.generators().to_vec(),
            subalgebra: m.label.name(),
            character: m.character.name().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LeadingEntry {
    pub lambda: Vec<i32>,
    pub rep: Option<ExtAffineWeylElement>,
    pub coeff: Option<serde_json::Value>,
    #[serde(skip)]
    pub unit: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreenessReport {
    pub module: ModuleDescriptor,
    #[serde(rename = "box")]
    pub lambdas: Vec<Vec<i32>>,
    pub rank: usize,
    pub expected_rank: usize,
    pub columns: usize,
    pub leading_map: Vec<LeadingEntry>,
    pub leading_injective: bool,
    pub leading_units: bool,
    pub rank_certified: bool,
    pub certification_points: Vec<i64>,
    pub length_bound: usize,
    pub required_length: usize,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// All integer vectors in `[lo, hi]^rank`, lexicographically ordered.
pub fn integer_box(rank: usize, lo: i32, hi: i32) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Upper bound on the support length of `θ_λ · (T_e ⊗ 1)` over a box.
pub fn box_length_bound(lambdas: &[Vec<i32>]) -> usize {
    lambdas
        .iter()
        .map(|l| crate::hecke::theta_length_bound(l))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Module<BigInt>;
    type P = Laurent<BigInt>;

    fn s(i: usize, n: usize) -> ExtAffineWeylElement {
        ExtAffineWeylElement::generator(i, n).unwrap()
    }

    fn single(w: ExtAffineWeylElement, c: P) -> Vector<BigInt> {
        let mut v = Vector::zero(w.rank());
        accumulate(&mut v.terms, w, c);
        v
    }

    #[test]
    fn cyclic_vector_eigenvalues() {
        for n in 1..=3 {
            let m = M::new(Character::sgn_prime(n)).unwrap();
            let g = m.generator_vector();
            assert_eq!(m.act_generator(n, &g), g.scale(&P::q()));
            for i in 1..n {
                assert_eq!(m.act_generator(i, &g), g.scale(&P::from_int(-1)));
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let m = M::new(Character::sgn_prime(1)).unwrap();
        assert_eq!(
            m.reduce_basis(&s(1, 1)),
            single(ExtAffineWeylElement::identity(1), P::q())
        );
        assert_eq!(m.reduce_basis(&s(0, 1)), single(s(0, 1), P::one()));
        let m = M::new(Character::epsilon(1, false)).unwrap();
        assert_eq!(
            m.reduce_basis(&s(0, 1)),
            single(ExtAffineWeylElement::identity(1), P::from_int(-1))
        );
    }

    #[test]
    fn theta_action_examples() {
        let m = M::new(Character::sgn_prime(1)).unwrap();
        let g = m.generator_vector();
        assert_eq!(m.act_theta(&[1], &g), single(s(0, 1), P::q()));
        let m = M::new(Character::epsilon(1, true)).unwrap();
        let g = m.generator_vector();
        assert_eq!(m.act_generator(0, &g), g);
    }

    #[test]
    fn lifted_action_matches_generator_action() {
        for m in M::standard_four(2) {
            let g = m.generator_vector();
            for lambda in integer_box(2, -1, 1) {
                let fast = m.act_theta(&lambda, &g);
                let slow = m.act(&crate::hecke::theta(&lambda), &g).unwrap();
                assert_eq!(fast, slow, "{lambda:?}");
            }
        }
    }

    #[test]
    fn action_matrix_examples() {
        let m = M::new(Character::sgn_prime(1)).unwrap();
        let e = ExtAffineWeylElement::identity(1);
        let a = m.action_matrix(1, std::slice::from_ref(&e)).unwrap();
        assert_eq!(a.matrix.get(0, 0), &P::q());
        assert_eq!(a.partial, vec![false]);
        let a = m.action_matrix(0, &[e.clone(), s(0, 1)]).unwrap();
        assert_eq!(
            a.matrix,
            Matrix::from_rows(vec![vec![P::zero(), P::one()], vec![P::one(), P::zero()]])
        );
        let m = M::new(Character::epsilon(1, false)).unwrap();
        let a = m.action_matrix(0, &[e]).unwrap();
        assert_eq!(a.matrix.get(0, 0), &P::from_int(-1));
        assert!(m.action_matrix(0, &[s(0, 1)]).is_err());
    }

    #[test]
    fn hom_table() {
        for n in 1..=3 {
            let four = M::standard_four(n);
            let st_plus = Character::steinberg(n, true);
            let st_minus = Character::steinberg(n, false);
            let dims: Vec<(usize, usize)> = four
                .iter()
                .map(|m| {
                    (
                        m.hom_dim_to_character(&st_plus).unwrap(),
                        m.hom_dim_to_character(&st_minus).unwrap(),
                    )
                })
                .collect();
            assert_eq!(dims, vec![(0, 0), (1, 1), (1, 0), (0, 1)]);
        }
        let m = M::new(Character::sgn(2)).unwrap();
        assert!(m.hom_dim_to_character(&Character::epsilon(2, true)).is_err());
    }

    #[test]
    fn freeness_small() {
        let m = M::new(Character::sgn_prime(1)).unwrap();
        let r = m.freeness_witness(&[vec![0]], 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.leading_map[0].rep, Some(ExtAffineWeylElement::identity(1)));
        let lambdas = integer_box(1, -1, 1);
        let r = m.freeness_witness(&lambdas, box_length_bound(&lambdas)).unwrap();
        assert!(r.pass, "{:?}", r.failures);
        assert_eq!(r.rank, 3);
        let plus = &r.leading_map[2];
        assert_eq!(plus.rep, Some(s(0, 1)));
        assert_eq!(plus.coeff, Some(P::q().to_json()));
        assert!(matches!(
            m.freeness_witness(&lambdas, 0),
            Err(Error::InsufficientLengthBound { given: 0, required: 2 })
        ));
    }

    #[test]
    fn minimal_rep_counts_rank_one() {
        for m in [
            M::new(Character::sgn(1)).unwrap(),
            M::new(Character::epsilon(1, true)).unwrap(),
        ] {
            for l in 0..8 {
                assert_eq!(m.minimal_reps(l).len(), l + 1);
            }
        }
    }
}
