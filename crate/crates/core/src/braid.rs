//! Braid words and their images in the symmetric group.

use std::fmt;

use num_integer::Integer as _;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the generators `σ_1, …, σ_{n-1}` of `B_n`.
///
/// Letter `i > 0` stands for `σ_i` and `-i` for its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::Parse("generator index 0".into()));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::StrandMismatch { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord { strands, letters: Vec::new() }
    }

    /// Parses whitespace- or comma-separated signed generator indices.
    ///
    /// Without `strands` the strand count is `max |letter| + 1`, at least 2.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad token `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let strands = match strands {
            Some(n) => n,
            None if letters.is_empty() => return Err(Error::EmptyAmbiguous),
            None => {
                let top = letters.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0);
                (top as usize + 1).max(2)
            }
        };
        Self::new(strands, letters)
    }

    /// `(σ_1 σ_2 ⋯ σ_{n-1})^m`, using inverse letters when `m < 0`.
    pub fn torus(n: usize, m: i64) -> Self {
        assert!(n >= 2, "torus braids need at least two strands");
        let cycle: Vec<i64> = (1..n as i64).collect();
        let base = BraidWord { strands: n, letters: cycle };
        if m >= 0 {
            base.pow(m as usize)
        } else {
            base.inverse().pow(m.unsigned_abs() as usize)
        }
    }

    /// Like [`BraidWord::torus`] but requires `gcd(n, m) = 1` so the closure is a knot.
    pub fn torus_knot(n: usize, m: i64) -> Result<Self> {
        let g = (n as i64).gcd(&m);
        if g != 1 {
            return Err(Error::NotCoprime { a: n as i64, b: m, gcd: g });
        }
        Ok(Self::torus(n, m))
    }

    /// A uniformly random word with `len` letters.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> Self {
        assert!(strands >= 2);
        let letters = (0..len)
            .map(|_| {
                let g = rng.random_range(1..strands as i64);
                if rng.random_bool(0.5) { g } else { -g }
            })
            .collect();
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Concatenation `self · rhs`.
    pub fn concat(&self, rhs: &Self) -> Result<Self> {
        if self.strands != rhs.strands {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply braids on {} and {} strands",
                self.strands, rhs.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn pow(&self, k: usize) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }

    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            p = p.compose(&Permutation::transposition(self.strands, i, i + 1));
        }
        p
    }

    /// Whether the closure has a single component.
    pub fn is_knot(&self) -> bool {
        self.permutation().is_full_cycle()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A permutation of `{1, …, n}` stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// The cycle `c[0] → c[1] → ⋯ → c[0]` on `n` points.
    pub fn cycle(n: usize, c: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for (k, &x) in c.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::InvalidArgument(format!("point {x} outside 1..={n}")));
            }
            images[x - 1] = c[(k + 1) % c.len()];
        }
        Self::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `self ∘ rhs`, i.e. apply `rhs` first.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.len(), rhs.len());
        Permutation {
            images: rhs.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 1..=self.len() {
            if seen[start - 1] {
                continue;
            }
            let mut c = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 { 1 } else { -1 }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}
