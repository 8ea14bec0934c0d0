//! Seeded instance generators. Output is a pure function of the
//! parameters and the 64-bit seed; arc orientations come from a
//! counter-based keyed stream, so generation could proceed pair-by-pair in
//! any order with identical results.

use crate::light::{is_light, light_partition};
use crate::seeded::{self, Stream};
use crate::tournament::{Coloring, Tournament};
use crate::vset::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("need 1 <= k <= n (got k={k}, n={n})")]
    BadClassCount { k: usize, n: usize },
    #[error("{0} is not a prime congruent to 3 mod 4")]
    BadPaleyModulus(usize),
    #[error("invalid residue set: {0}")]
    BadResidues(String),
    #[error("no light tournament found within {attempts} attempts")]
    Exhausted { attempts: usize },
}

/// Parameter record for a generator run: the seed fully determines the
/// output for every kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Random,
    /// Planted k-colorable partition.
    Planted { k: usize },
    Paley,
    Circulant { residues: Vec<usize> },
    /// Rejection-sampled light instance.
    Light { attempts: usize },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Tournament, GeneratorError> {
        match &self.kind {
            GeneratorKind::Random => Ok(random_tournament(self.n, self.seed)),
            GeneratorKind::Planted { k } => {
                planted_k_colorable(self.n, *k, self.seed).map(|(t, _)| t)
            }
            GeneratorKind::Paley => paley(self.n),
            GeneratorKind::Circulant { residues } => circulant(
                self.n,
                &VertexSet::from_members(self.n, residues.iter().copied()),
            ),
            GeneratorKind::Light { attempts } => light_sampler(self.n, self.seed, *attempts),
        }
    }
}

/// Uniform random tournament: each unordered pair flips an independent
/// fair coin from the seeded stream.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    assert!(n >= 1);
    Tournament::from_arc_fn(n, |i, j| {
        if i < j {
            seeded::pair_coin(seed, i, j)
        } else {
            !seeded::pair_coin(seed, j, i)
        }
    })
}

/// Random tournament with a planted k-coloring: a random partition into k
/// nonempty classes, a random transitive order inside each class, fair
/// coins across classes. The planted coloring is returned and verifies.
pub fn planted_k_colorable(
    n: usize,
    k: usize,
    seed: u64,
) -> Result<(Tournament, Coloring), GeneratorError> {
    if k < 1 || k > n {
        return Err(GeneratorError::BadClassCount { k, n });
    }
    let mut stream = Stream::new(seeded::derive(seed, 1));
    // nonempty classes: the first k of a shuffled vertex list seed the
    // classes, the rest draw uniformly
    let mut vertices: Vec<usize> = (0..n).collect();
    stream.shuffle(&mut vertices);
    let mut class = vec![0usize; n];
    for (c, &v) in vertices.iter().take(k).enumerate() {
        class[v] = c;
    }
    for &v in vertices.iter().skip(k) {
        class[v] = stream.below(k as u64) as usize;
    }
    // a random total order per class: rank = position in a shuffle
    let mut rank = vec![0usize; n];
    for c in 0..k {
        let mut members: Vec<usize> = (0..n).filter(|&v| class[v] == c).collect();
        stream.shuffle(&mut members);
        for (r, &v) in members.iter().enumerate() {
            rank[v] = r;
        }
    }
    let cross_seed = seeded::derive(seed, 2);
    let t = Tournament::from_arc_fn(n, |i, j| {
        if class[i] == class[j] {
            rank[i] < rank[j]
        } else if i < j {
            seeded::pair_coin(cross_seed, i, j)
        } else {
            !seeded::pair_coin(cross_seed, j, i)
        }
    });
    let coloring = Coloring::new(class.iter().map(|&c| c as u32).collect());
    debug_assert_eq!(t.verify_coloring(&coloring), Ok(()));
    Ok((t, coloring))
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Quadratic-residue tournament on a prime q ≡ 3 (mod 4): arc i→j iff
/// (j−i) mod q is a nonzero square. The congruence makes exactly one of
/// ±r a residue, so orientation is total.
pub fn paley(q: usize) -> Result<Tournament, GeneratorError> {
    if !is_prime(q) || q % 4 != 3 {
        return Err(GeneratorError::BadPaleyModulus(q));
    }
    let residues = quadratic_residues(q);
    Ok(Tournament::from_arc_fn(q, |i, j| {
        residues.contains((j + q - i) % q)
    }))
}

/// The set {x² mod q : 1 ≤ x < q}.
pub fn quadratic_residues(q: usize) -> VertexSet {
    let mut s = VertexSet::empty(q);
    for x in 1..q {
        s.insert(x * x % q);
    }
    s
}

/// Circulant tournament: arc i→j iff (j−i) mod n is in the residue set,
/// which must pick exactly one of {r, n−r} per pair (n odd).
pub fn circulant(n: usize, residues: &VertexSet) -> Result<Tournament, GeneratorError> {
    if n % 2 == 0 || n < 1 {
        return Err(GeneratorError::BadResidues(format!("n={n} must be odd")));
    }
    for r in 1..=(n - 1) / 2 {
        let a = residues.contains(r);
        let b = residues.contains(n - r);
        if a == b {
            return Err(GeneratorError::BadResidues(format!(
                "exactly one of {{{r}, {}}} must be present",
                n - r
            )));
        }
    }
    if residues.contains(0) || residues.iter().any(|r| r >= n) {
        return Err(GeneratorError::BadResidues("residues must lie in 1..n".into()));
    }
    Ok(Tournament::from_arc_fn(n, |i, j| {
        residues.contains((j + n - i) % n)
    }))
}

/// Random residue choice: one of {r, n−r} per pair by a seeded coin.
pub fn random_circulant(n: usize, seed: u64) -> Tournament {
    debug_assert!(n % 2 == 1);
    let mut residues = VertexSet::empty(n);
    for r in 1..=(n - 1) / 2 {
        if seeded::keyed(seed, r as u64) & 1 == 1 {
            residues.insert(r);
        } else {
            residues.insert(n - r);
        }
    }
    circulant(n, &residues).expect("constructed residue set is valid")
}

/// Rejection sampler for light tournaments on exactly n vertices.
/// Candidates alternate between random circulants (odd n only) and the
/// larger part of the light partition of a planted 2-colorable tournament
/// on 2n vertices (parts of light partitions are always light, and the
/// larger part has at least n vertices).
pub fn light_sampler(n: usize, seed: u64, attempts: usize) -> Result<Tournament, GeneratorError> {
    assert!(attempts >= 1);
    assert!(n >= 1);
    for attempt in 0..attempts {
        let attempt_seed = seeded::derive(seed, 1000 + attempt as u64);
        let candidate = if n % 2 == 1 && attempt % 2 == 0 {
            random_circulant(n, attempt_seed)
        } else {
            let (t2, _) = planted_k_colorable(2 * n, 2, attempt_seed)
                .expect("valid parameters");
            let (s1, s2) = match light_partition(&t2) {
                Ok(parts) => parts,
                Err(_) => continue, // random instance drifted non-2-colorable
            };
            let part = if s1.len() >= s2.len() { s1 } else { s2 };
            let first_n = VertexSet::from_members(2 * n, part.iter().take(n));
            t2.induced(&first_n).expect("in range").0
        };
        if is_light(&candidate).is_ok() {
            return Ok(candidate);
        }
    }
    Err(GeneratorError::Exhausted { attempts })
}
