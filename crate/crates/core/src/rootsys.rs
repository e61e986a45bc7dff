//! Root systems of the simple complex Lie algebras.
//!
//! Roots are integer vectors in the basis of simple roots. Weights are exact
//! rationals in the basis of fundamental weights, so that coordinate `i` of a
//! weight `λ` is the pairing `λ(H_{α_i})` with the `i`-th simple coroot and
//! the half-sum of positive roots is `δ = (1, …, 1)`.
//!
//! Cartan matrix convention: `cartan[i][j] = α_j(H_{α_i})`, i.e. row `i` is
//! the simple coroot `H_{α_i}` evaluated on the simple roots. Column `j` is
//! therefore the simple root `α_j` written in fundamental coordinates.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A Cartan type such as `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRootSystem {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix in the convention described in the module docs, together
    /// with the minimal positive integers `d_i` making `d_i * cartan[i][j]`
    /// symmetric (so `(α_i, α_i) = 2 d_i`).
    fn cartan_and_symmetrizer(&self) -> (Vec<Vec<i64>>, Vec<i64>) {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        let mut d = vec![1i64; n];
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            Family::B => {
                // α_n short
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
                a[n - 1][n - 2] = -2;
                d = vec![2; n];
                d[n - 1] = 1;
            }
            Family::C => {
                // α_n long
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
                a[n - 2][n - 1] = -2;
                d[n - 1] = 2;
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                // Bourbaki labels 1-3-4-5-6-7-8 with 2 attached to 4.
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
                a[2][1] = -2;
                d = vec![2, 2, 1, 1];
            }
            Family::G => {
                // α_1 short, α_2 long
                a[0][1] = -3;
                a[1][0] = -1;
                d = vec![1, 3];
            }
        }
        (a, d)
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Indices of the simple roots with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self {
            coords: coords.iter().map(|&c| Rational::from_integer(c.into())).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); rank],
        }
    }

    /// `δ = (1, …, 1)`.
    pub fn rho(rank: usize) -> Self {
        Self {
            coords: vec![Rational::one(); rank],
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * s).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }

    fn check_rank(&self, rank: usize) -> Result<()> {
        if self.coords.len() == rank {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: rank,
                got: self.coords.len(),
            })
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Parses comma-separated rationals, e.g. `0,-3` or `1,-1/2`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Weight::new(Vec::new()));
        }
        s.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Weight::new)
    }
}

/// A product of simple reflections, applied left to right: the word
/// `[i1, i2, …]` acts on a weight as `… s_{i2} s_{i1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dominant {
    pub dominant: Weight,
    pub word: WeylWord,
    /// `#{α ∈ Δ⁺ : λ(H_α) < 0}`.
    pub inversions: usize,
}

/// Cartan data plus the generated positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive: Vec<Root>,
    /// Coroot of each positive root in the simple-coroot basis.
    coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Self {
        let (cartan, symmetrizer) = spec.cartan_and_symmetrizer();
        let positive = close_positive_roots(&cartan);
        let mut sys = Self {
            spec,
            cartan,
            symmetrizer,
            positive: Vec::new(),
            coroots: Vec::new(),
        };
        sys.coroots = positive.iter().map(|r| sys.coroot_coords(r)).collect();
        sys.positive = positive;
        sys
    }

    pub fn from_type(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(RootSystemSpec::new(family, rank)?))
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_j)` up to an overall factor 1/2: `d_i * cartan[i][j]`.
    pub fn symmetrized_form(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.symmetrizer[i] * self.cartan[i][j]).collect())
            .collect()
    }

    /// Positive roots ordered by height, then lexicographically by coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        Ok(Root { coords })
    }

    /// Builds a root from simple-root coordinates, checking that it is one.
    pub fn root(&self, coords: &[i64]) -> Result<Root> {
        if coords.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        if self
            .positive
            .iter()
            .any(|r| r.coords == coords || r.coords == neg)
        {
            Ok(Root {
                coords: coords.to_vec(),
            })
        } else {
            Err(Error::NotARoot(format!("{coords:?}")))
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    fn coroot_coords(&self, root: &Root) -> Vec<i64> {
        let b = self.symmetrized_form();
        let n = self.rank();
        // (α, α) in units where (α_i, α_i) = 2 d_i
        let mut norm = 0i64;
        for i in 0..n {
            for j in 0..n {
                norm += root.coords[i] * root.coords[j] * b[i][j];
            }
        }
        (0..n)
            .map(|j| {
                let num = root.coords[j] * 2 * self.symmetrizer[j];
                debug_assert_eq!(num % norm, 0);
                num / norm
            })
            .collect()
    }

    /// `λ(H_α)`.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<Rational> {
        lambda.check_rank(self.rank())?;
        if alpha.coords.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: alpha.coords.len(),
            });
        }
        let coroot = match self.positive.iter().position(|r| r == alpha) {
            Some(k) => self.coroots[k].clone(),
            None => self.coroot_coords(alpha),
        };
        Ok(contract(&coroot, &lambda.coords))
    }

    /// Pairings of `λ` with the coroots of all positive roots, in
    /// `positive_roots` order.
    pub fn pairings(&self, lambda: &Weight) -> Result<Vec<Rational>> {
        lambda.check_rank(self.rank())?;
        Ok(self
            .coroots
            .iter()
            .map(|c| contract(c, &lambda.coords))
            .collect())
    }

    /// `s_i λ = λ − λ(H_{α_i}) α_i`.
    pub fn simple_reflection(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        lambda.check_rank(self.rank())?;
        Ok(self.reflect_unchecked(i, lambda))
    }

    fn reflect_unchecked(&self, i: usize, lambda: &Weight) -> Weight {
        let li = lambda.coords[i].clone();
        if li.is_zero() {
            return lambda.clone();
        }
        Weight::new(
            lambda
                .coords
                .iter()
                .enumerate()
                .map(|(j, c)| c - &li * Rational::from_integer(self.cartan[j][i].into()))
                .collect(),
        )
    }

    /// Reflection of a root in the simple root `α_i`.
    pub fn reflect_root(&self, i: usize, root: &Root) -> Result<Root> {
        self.check_index(i)?;
        let pairing: i64 = (0..self.rank())
            .map(|j| root.coords[j] * self.cartan[i][j])
            .sum();
        let mut coords = root.coords.clone();
        coords[i] -= pairing;
        Ok(Root { coords })
    }

    /// Applies the reflections of `word` to `λ`, left to right.
    pub fn apply_word(&self, word: &WeylWord, lambda: &Weight) -> Result<Weight> {
        lambda.check_rank(self.rank())?;
        let mut w = lambda.clone();
        for &i in &word.letters {
            self.check_index(i)?;
            w = self.reflect_unchecked(i, &w);
        }
        Ok(w)
    }

    /// Moves `λ` into the dominant chamber by repeatedly reflecting in the
    /// first simple root it pairs negatively with.
    pub fn to_dominant(&self, lambda: &Weight) -> Result<Dominant> {
        lambda.check_rank(self.rank())?;
        let inversions = self
            .pairings(lambda)?
            .iter()
            .filter(|p| p.is_negative())
            .count();
        let mut current = lambda.clone();
        let mut letters = Vec::new();
        while let Some(i) = current.coords.iter().position(|c| c.is_negative()) {
            current = self.reflect_unchecked(i, &current);
            letters.push(i);
        }
        Ok(Dominant {
            dominant: current,
            word: WeylWord::new(letters),
            inversions,
        })
    }

    /// A reduced word for the longest element `w₀`.
    pub fn longest_element(&self) -> WeylWord {
        let anti = Weight::rho(self.rank()).neg();
        self.to_dominant(&anti)
            .expect("rank matches by construction")
            .word
    }

    /// `−w₀ λ`.
    pub fn negate_by_w0(&self, lambda: &Weight) -> Result<Weight> {
        let w0 = self.longest_element();
        Ok(self.apply_word(&w0, lambda)?.neg())
    }

    /// Dimension of the irreducible representation with highest weight `ζ`,
    /// `∏_{α>0} (ζ+δ)(H_α) / δ(H_α)`.
    pub fn weyl_dim(&self, zeta: &Weight) -> Result<BigUint> {
        zeta.check_rank(self.rank())?;
        if !zeta.is_integral() || !zeta.is_dominant() {
            return Err(Error::NotDominantIntegral(zeta.to_string()));
        }
        let shifted = zeta.add(&Weight::rho(self.rank()));
        let mut num = Rational::one();
        for coroot in &self.coroots {
            let top = contract(coroot, &shifted.coords);
            let bottom: i64 = coroot.iter().sum();
            num = num * top / Rational::from_integer(BigInt::from(bottom));
        }
        debug_assert!(num.is_integer());
        Ok(num
            .to_integer()
            .to_biguint()
            .expect("Weyl dimension is positive"))
    }

    /// Simple root `α_i` written in fundamental coordinates.
    pub fn simple_root_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        Ok(Weight::new(
            (0..self.rank())
                .map(|j| Rational::from_integer(self.cartan[j][i].into()))
                .collect(),
        ))
    }

    /// A root (any sign) written in fundamental coordinates.
    pub fn root_weight(&self, root: &Root) -> Weight {
        Weight::new(
            (0..self.rank())
                .map(|j| {
                    let s: i64 = (0..self.rank())
                        .map(|i| root.coords[i] * self.cartan[j][i])
                        .sum();
                    Rational::from_integer(s.into())
                })
                .collect(),
        )
    }

    /// Number of positive roots, as a quick sanity value.
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }
}

fn contract(coroot: &[i64], coords: &[Rational]) -> Rational {
    coroot
        .iter()
        .zip(coords)
        .filter(|(c, _)| **c != 0)
        .map(|(&c, x)| x * Rational::from_integer(c.into()))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Closes the simple roots under root strings: `β + α_i` is a root exactly
/// when `q = p − β(H_{α_i}) > 0`, where `p` is the largest `k` with
/// `β − kα_i` a root.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    use std::collections::HashSet;
    let n = cartan.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = 1;
            c
        })
        .collect();
    let mut ordered = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        layer.dedup();
        for r in &layer {
            all.insert(r.clone());
        }
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.push(up);
                }
            }
        }
        ordered.append(&mut layer);
        layer = next;
    }
    ordered.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    ordered.into_iter().map(|coords| Root { coords }).collect()
}

/// Convenience for tests and callers holding small integers.
pub fn weight(coords: &[i64]) -> Weight {
    Weight::from_ints(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn sys(f: Family, r: usize) -> RootSystem {
        RootSystem::from_type(f, r).unwrap()
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(RootSystemSpec::new(Family::G, 3).is_err());
        assert!(RootSystemSpec::new(Family::A, 0).is_err());
        assert!(RootSystemSpec::new(Family::E, 5).is_err());
        assert!(RootSystemSpec::new(Family::B, 1).is_err());
        assert!(RootSystemSpec::new(Family::F, 4).is_ok());
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Family::A, 1, 1),
            (Family::A, 2, 3),
            (Family::A, 3, 6),
            (Family::B, 2, 4),
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 3, 6),
            (Family::D, 4, 12),
            (Family::G, 2, 6),
            (Family::F, 4, 24),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
        ];
        for (f, r, count) in cases {
            assert_eq!(sys(f, r).num_positive(), count, "{f:?}{r}");
        }
    }

    #[test]
    fn a2_roots_in_order() {
        let s = sys(Family::A, 2);
        let coords: Vec<_> = s.positive_roots().iter().map(|r| r.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_highest_root() {
        let s = sys(Family::G, 2);
        let last = s.positive_roots().last().unwrap();
        assert_eq!(last.coords(), &[3, 2]);
    }

    #[test]
    fn pairing_examples() {
        let s = sys(Family::A, 2);
        let top = s.root(&[1, 1]).unwrap();
        assert_eq!(s.pairing(&weight(&[1, 1]), &top).unwrap(), q(2, 1));
        let l = Weight::new(vec![q(3, 7), q(-5, 2)]);
        assert_eq!(s.pairing(&l, &s.simple_root(1).unwrap()).unwrap(), q(-5, 2));
        assert!(s.pairing(&weight(&[1]), &top).is_err());
    }

    #[test]
    fn g2_long_root_coroot() {
        // In G2 the coroot of the long root 3a1+2a2 is H_1 + 2 H_2.
        let s = sys(Family::G, 2);
        let r = s.root(&[3, 2]).unwrap();
        assert_eq!(s.pairing(&weight(&[1, 0]), &r).unwrap(), q(1, 1));
        assert_eq!(s.pairing(&weight(&[0, 1]), &r).unwrap(), q(2, 1));
    }

    #[test]
    fn reflection_examples() {
        let s = sys(Family::A, 2);
        assert_eq!(
            s.simple_reflection(0, &weight(&[-1, -1])).unwrap(),
            weight(&[1, -2])
        );
        assert_eq!(s.simple_reflection(1, &weight(&[0, 0])).unwrap(), weight(&[0, 0]));
        let a1 = sys(Family::A, 1);
        assert_eq!(a1.simple_reflection(0, &weight(&[7])).unwrap(), weight(&[-7]));
        assert!(a1.simple_reflection(1, &weight(&[7])).is_err());
    }

    #[test]
    fn to_dominant_examples() {
        let s = sys(Family::A, 2);
        let d = s.to_dominant(&weight(&[-1, -1])).unwrap();
        assert_eq!(d.dominant, weight(&[1, 1]));
        assert_eq!(d.inversions, 3);
        assert_eq!(d.word.len(), 3);
        let d = s.to_dominant(&weight(&[1, 1])).unwrap();
        assert!(d.word.is_empty());
        assert_eq!(d.inversions, 0);
        let a1 = sys(Family::A, 1);
        let d = a1.to_dominant(&weight(&[-5])).unwrap();
        assert_eq!(d.dominant, weight(&[5]));
        assert_eq!(d.inversions, 1);
    }

    #[test]
    fn longest_element_examples() {
        let a2 = sys(Family::A, 2);
        assert_eq!(a2.longest_element().len(), 3);
        assert_eq!(a2.negate_by_w0(&weight(&[4, 0])).unwrap(), weight(&[0, 4]));
        let a1 = sys(Family::A, 1);
        assert_eq!(a1.negate_by_w0(&weight(&[3])).unwrap(), weight(&[3]));
        for (f, r) in [(Family::B, 3), (Family::G, 2), (Family::E, 6)] {
            let s = sys(f, r);
            assert_eq!(s.longest_element().len(), s.num_positive());
            assert_eq!(s.negate_by_w0(&Weight::zero(r)).unwrap(), Weight::zero(r));
        }
        // −w₀ is the identity on B_n, nontrivial on E6
        let b3 = sys(Family::B, 3);
        assert_eq!(b3.negate_by_w0(&weight(&[1, 2, 3])).unwrap(), weight(&[1, 2, 3]));
        let e6 = sys(Family::E, 6);
        assert_eq!(
            e6.negate_by_w0(&weight(&[1, 0, 0, 0, 0, 0])).unwrap(),
            weight(&[0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn weyl_dim_examples() {
        let a1 = sys(Family::A, 1);
        for n in 0..10 {
            assert_eq!(a1.weyl_dim(&weight(&[n])).unwrap(), BigUint::from((n + 1) as u64));
        }
        let a2 = sys(Family::A, 2);
        assert_eq!(a2.weyl_dim(&weight(&[1, 0])).unwrap(), BigUint::from(3u32));
        assert_eq!(a2.weyl_dim(&weight(&[1, 1])).unwrap(), BigUint::from(8u32));
        assert_eq!(a2.weyl_dim(&weight(&[0, 0])).unwrap(), BigUint::from(1u32));
        let g2 = sys(Family::G, 2);
        assert_eq!(g2.weyl_dim(&weight(&[1, 0])).unwrap(), BigUint::from(7u32));
        assert_eq!(g2.weyl_dim(&weight(&[0, 1])).unwrap(), BigUint::from(14u32));
        let e8 = sys(Family::E, 8);
        assert_eq!(
            e8.weyl_dim(&weight(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(),
            BigUint::from(248u32)
        );
        assert!(a2.weyl_dim(&weight(&[-1, 0])).is_err());
        assert!(a2.weyl_dim(&Weight::new(vec![q(1, 2), q(0, 1)])).is_err());
    }

    #[test]
    fn weight_parsing() {
        let w: Weight = "1,-1/2".parse().unwrap();
        assert_eq!(w, Weight::new(vec![q(1, 1), q(-1, 2)]));
        assert!("1,x".parse::<Weight>().is_err());
    }
}
