//! Parameters for `G(l,1,n)`, the affine symmetric group acting on the
//! stability hyperplane `Σθ = 1`, and reduction of `θ` into the closed
//! fundamental alcove `{0 <= θ_p <= 1}`.
//!
//! All arithmetic is exact; wall membership `ε_j = 0` is decided on
//! rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::jheart::ResidueSet;
use crate::partition::Permutation;

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"3"`, `"-1/2"`, `"4/6"`. No decimal or float syntax.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Comma separated rationals, e.g. `"1/3,-1/2"`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Parameters `h = (-1; H_1, .., H_{l-1})` for `G(l,1,n)` and the derived
/// denominator `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    l: usize,
    n: usize,
    h: Vec<Rational>,
    d: u64,
}

fn denominator_lcm(values: &[Rational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

impl FamilyParams {
    /// `h` holds `H_1, .., H_{l-1}`; `d` is the least positive integer
    /// clearing all their denominators.
    pub fn new(l: usize, n: usize, h: Vec<Rational>) -> Result<Self> {
        if l < 2 {
            return Err(Error::LevelTooSmall(l));
        }
        if h.len() != l - 1 {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries H_1..H_{}, got {}",
                l - 1,
                l - 1,
                h.len()
            )));
        }
        let d = denominator_lcm(&h)
            .to_u64()
            .ok_or_else(|| Error::InvalidParameter("denominator too large".into()))?;
        Ok(FamilyParams { l, n, h, d })
    }

    /// Same parameters with a non-minimal denominator `d`, which must be a
    /// multiple of the minimal one.
    pub fn with_denominator(&self, d: u64) -> Result<Self> {
        if d == 0 || !d.is_multiple_of(self.d) {
            return Err(Error::InvalidParameter(format!(
                "d = {d} is not a positive multiple of {}",
                self.d
            )));
        }
        Ok(FamilyParams { d, ..self.clone() })
    }

    pub fn level(&self) -> usize {
        self.l
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn with_size(&self, n: usize) -> Self {
        FamilyParams { n, ..self.clone() }
    }

    pub fn denominator(&self) -> u64 {
        self.d
    }

    /// `H_1, .., H_{l-1}`.
    pub fn h(&self) -> &[Rational] {
        &self.h
    }

    /// `H_0 = -(H_1 + .. + H_{l-1})`.
    pub fn h0(&self) -> Rational {
        -self.h.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    /// The stability parameter `θ = (1 + H_0, H_1, .., H_{l-1})`.
    pub fn theta(&self) -> Vec<Rational> {
        let mut theta = Vec::with_capacity(self.l);
        theta.push(Rational::one() + self.h0());
        theta.extend(self.h.iter().cloned());
        theta
    }

    /// `m̄ = (0, dH_1, dH_1 + dH_2, ..)`.
    pub fn mbar(&self) -> Vec<i64> {
        let d = int(self.d as i64);
        let mut acc = Rational::zero();
        let mut out = vec![0];
        for hi in &self.h {
            acc += hi * &d;
            out.push(to_i64(&acc));
        }
        out
    }

    /// `m(dθ)`: partial sums `d(θ_0 + .. + θ_p)`.
    pub fn mdtheta(&self) -> Vec<i64> {
        let d = int(self.d as i64);
        partial_sums(&self.theta())
            .iter()
            .map(|v| to_i64(&(v * &d)))
            .collect()
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.h.iter().map(ToString::to_string).collect();
        write!(f, "{};{};{}", self.l, self.n, h.join(","))
    }
}

fn to_i64(v: &Rational) -> i64 {
    assert!(v.is_integer(), "expected an integer, got {v}");
    v.to_integer().to_i64().expect("integer out of i64 range")
}

pub fn partial_sums(v: &[Rational]) -> Vec<Rational> {
    let mut acc = Rational::zero();
    v.iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

/// Rational Cherednik parameters for `G(l,1,n)`: `k_{C1,1}` and
/// `k_{C2,0..l-1}` with `k_{C2,0} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CherednikParams {
    pub k_c1: Rational,
    pub k_c2: Vec<Rational>,
}

/// `h = k_{C1,1}`, `H_i = k_{C2,l-i+1} - k_{C2,l-i}` with indices mod `l`.
pub fn cherednik_to_h(k: &CherednikParams) -> (Rational, Vec<Rational>) {
    let l = k.k_c2.len();
    let at = |i: usize| k.k_c2[i % l].clone();
    let h = (1..l).map(|i| at(l - i + 1) - at(l - i)).collect();
    (k.k_c1.clone(), h)
}

/// `m_{C,j} = -k_{C, e_C - j}` (indices mod `e_C`) for each orbit, where
/// `e_C` is the length of that orbit's list.
pub fn cherednik_to_hecke_m(orbits: &[Vec<Rational>]) -> Result<Vec<Vec<i64>>> {
    orbits
        .iter()
        .map(|k| {
            let e = k.len();
            (0..e)
                .map(|j| {
                    let v = &k[(e - j) % e];
                    if !v.is_integer() {
                        return Err(Error::NonInteger(v.to_string()));
                    }
                    v.to_integer()
                        .to_i64()
                        .map(|x| -x)
                        .ok_or_else(|| Error::NonInteger(v.to_string()))
                })
                .collect()
        })
        .collect()
}

/// Hecke parameters `m` computed with respect to `dh`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeParams {
    pub m_c1: [i64; 2],
    pub m_c2: Vec<i64>,
}

pub fn hecke_m_from_params(p: &FamilyParams) -> HeckeParams {
    HeckeParams {
        m_c1: [0, p.d as i64],
        m_c2: p.mbar(),
    }
}

/// `s_i · v = v - v_i α_i` with `α_i = -e_{i-1} + 2e_i - e_{i+1}`, indices
/// mod `l`. Valid for `1 <= i <= l-1`.
pub fn simple_reflection(i: usize, v: &[Rational]) -> Vec<Rational> {
    let l = v.len();
    assert!(i >= 1 && i < l, "simple reflections are s_1..s_(l-1)");
    let vi = v[i].clone();
    let mut out = v.to_vec();
    out[i - 1] += &vi;
    out[i] -= &vi * int(2);
    out[(i + 1) % l] += &vi;
    out
}

/// `φ(r)_p = r_{p-1} - r_p` with `r_{-1} = r_{l-1}`.
pub fn phi(r: &[i64]) -> Result<Vec<i64>> {
    let sum: i64 = r.iter().sum();
    if sum != 0 {
        return Err(Error::BadSum {
            expected: "0".into(),
            found: sum.to_string(),
        });
    }
    let l = r.len();
    Ok((0..l).map(|p| r[(p + l - 1) % l] - r[p]).collect())
}

/// `(w·r)_p = r_{w^{-1}(p)}`.
pub fn permute_vector<T: Clone>(w: &Permutation, r: &[T]) -> Vec<T> {
    let inv = w.inverse();
    (0..r.len()).map(|p| r[inv.apply(p)].clone()).collect()
}

/// Applies the finite group element `w` to `v` through a reduced word.
pub fn act_finite(w: &Permutation, v: &[Rational]) -> Vec<Rational> {
    act_word(&w.reduced_word(), v)
}

/// `s_{i_1} · (s_{i_2} · (.. s_{i_k} · v))`.
pub fn act_word(word: &[usize], v: &[Rational]) -> Vec<Rational> {
    word.iter()
        .rev()
        .fold(v.to_vec(), |acc, &i| simple_reflection(i, &acc))
}

/// The element `φ(r) w` of the affine symmetric group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineElement {
    pub w: Permutation,
    pub r: Vec<i64>,
}

impl AffineElement {
    pub fn new(w: Permutation, r: Vec<i64>) -> Result<Self> {
        if w.degree() != r.len() {
            return Err(Error::LevelMismatch {
                expected: w.degree(),
                found: r.len(),
            });
        }
        let sum: i64 = r.iter().sum();
        if sum != 0 {
            return Err(Error::BadSum {
                expected: "0".into(),
                found: sum.to_string(),
            });
        }
        Ok(AffineElement { w, r })
    }

    pub fn identity(l: usize) -> Self {
        AffineElement {
            w: Permutation::identity(l),
            r: vec![0; l],
        }
    }

    pub fn level(&self) -> usize {
        self.r.len()
    }

    /// `(φ(r1) w1)(φ(r2) w2) = φ(r1 + w1·r2) w1 w2`.
    pub fn compose(&self, other: &Self) -> Self {
        let moved = permute_vector(&self.w, &other.r);
        let r = self.r.iter().zip(&moved).map(|(a, b)| a + b).collect();
        AffineElement {
            w: self.w.compose(&other.w),
            r,
        }
    }

    /// `φ(r) w · θ`: the finite part acts by reflections, then `φ(r)`
    /// translates.
    pub fn apply(&self, theta: &[Rational]) -> Result<Vec<Rational>> {
        if theta.len() != self.level() {
            return Err(Error::LevelMismatch {
                expected: self.level(),
                found: theta.len(),
            });
        }
        let sum = theta.iter().fold(Rational::zero(), |acc, x| acc + x);
        if !sum.is_one() {
            return Err(Error::BadSum {
                expected: "1".into(),
                found: sum.to_string(),
            });
        }
        let moved = act_finite(&self.w, theta);
        let shift = phi(&self.r)?;
        Ok(moved
            .into_iter()
            .zip(shift)
            .map(|(x, s)| x + int(s))
            .collect())
    }
}

/// Is `v` in the closed fundamental alcove?
pub fn in_alcove(v: &[Rational]) -> bool {
    let sum = v.iter().fold(Rational::zero(), |acc, x| acc + x);
    sum.is_one() && v.iter().all(|x| !x.is_negative() && *x <= Rational::one())
}

/// Order in which positions with equal fractional part are sorted during
/// reduction. Any choice gives a valid reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    AscendingIndex,
    DescendingIndex,
}

/// Everything the family pipelines need from the reduction of `θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveDatum {
    pub element: AffineElement,
    pub epsilon: Vec<Rational>,
    pub j: ResidueSet,
    pub d: u64,
    /// Nonempty classes `I_t = [a, b]`, keyed by `t`.
    pub classes: BTreeMap<u64, (usize, usize)>,
    pub mbar: Vec<i64>,
    pub mdtheta: Vec<i64>,
}

impl AlcoveDatum {
    pub fn level(&self) -> usize {
        self.epsilon.len()
    }

    /// The class `t` containing position `p`.
    pub fn class_of(&self, p: usize) -> u64 {
        self.classes
            .iter()
            .find(|(_, &(a, b))| a <= p && p <= b)
            .map(|(&t, _)| t)
            .expect("classes cover 0..l")
    }

    pub fn class(&self, t: u64) -> Option<(usize, usize)> {
        self.classes.get(&t).copied()
    }
}

/// Partial-sum classes `I_t = {p : m_p(dε) = t}` as intervals.
///
/// Panics if `dε` is not integral or a class is not an interval.
pub fn classes_i(epsilon: &[Rational], d: u64) -> BTreeMap<u64, (usize, usize)> {
    let dr = int(d as i64);
    let mut out: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for (p, s) in partial_sums(epsilon).iter().enumerate() {
        let t = to_i64(&(s * &dr));
        assert!(t >= 0 && t as u64 <= d, "partial sum {t} outside [0, {d}]");
        let t = t as u64;
        match out.get_mut(&t) {
            Some((_, b)) => {
                assert_eq!(*b + 1, p, "class I_{t} is not an interval");
                *b = p;
            }
            None => {
                out.insert(t, (p, p));
            }
        }
    }
    out
}

/// Reduces `θ` into the fundamental alcove with the default tie-breaking.
pub fn reduce_to_alcove(p: &FamilyParams) -> AlcoveDatum {
    reduce_to_alcove_with(p, TieBreak::default())
}

pub fn reduce_to_alcove_with(p: &FamilyParams, tie: TieBreak) -> AlcoveDatum {
    let theta = p.theta();
    let (element, epsilon) = reduce_theta(&theta, tie);
    let j = ResidueSet::new(
        p.l,
        epsilon
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_zero())
            .map(|(j, _)| j),
    );
    let classes = classes_i(&epsilon, p.d);
    AlcoveDatum {
        element,
        epsilon,
        j,
        d: p.d,
        classes,
        mbar: p.mbar(),
        mdtheta: p.mdtheta(),
    }
}

/// Finds `(w, r)` with `φ(r) w · θ` in the alcove, returning the element and
/// the image.
///
/// The finite action permutes the partial-sum vector of `θ` (up to adding a
/// constant to every entry) and `φ(r)` subtracts `r_p` from the `p`-th
/// partial sum (again up to a constant). So it suffices to choose the
/// permutation and integer shifts that make the shifted partial sums
/// ascending within a window of width at most one.
pub fn reduce_theta(theta: &[Rational], tie: TieBreak) -> (AffineElement, Vec<Rational>) {
    let l = theta.len();
    let v = partial_sums(theta);
    let floors: Vec<BigInt> = v.iter().map(|x| x.floor().to_integer()).collect();
    let fracs: Vec<Rational> = v
        .iter()
        .zip(&floors)
        .map(|(x, f)| x - Rational::from_integer(f.clone()))
        .collect();

    let mut order: Vec<usize> = (0..l).collect();
    order.sort_by(|&a, &b| {
        fracs[a].cmp(&fracs[b]).then_with(|| match tie {
            TieBreak::AscendingIndex => a.cmp(&b),
            TieBreak::DescendingIndex => b.cmp(&a),
        })
    });

    let s: BigInt = floors.iter().sum();
    let lb = BigInt::from(l);
    let k = s.mod_floor(&lb).to_usize().unwrap();
    let a = (&s - BigInt::from(k)) / &lb;

    // pi'(p) = order[(p + k) mod l]; the last k positions wrap around.
    let rotated: Vec<usize> = (0..l).map(|p| order[(p + k) % l]).collect();
    let r: Vec<i64> = (0..l)
        .map(|p| {
            let mut rp = floors[rotated[p]].clone() - &a;
            if p >= l - k {
                rp -= 1;
            }
            rp.to_i64().expect("translation out of i64 range")
        })
        .collect();
    let w = Permutation::new(rotated.clone()).unwrap().inverse();

    let q: Vec<Rational> = (0..l).map(|p| &v[rotated[p]] - int(r[p])).collect();
    let mut epsilon = Vec::with_capacity(l);
    epsilon.push(Rational::one() - (&q[l - 1] - &q[0]));
    for p in 1..l {
        epsilon.push(&q[p] - &q[p - 1]);
    }

    let element = AffineElement::new(w, r).expect("translation sums to zero");
    let applied = element
        .apply(theta)
        .expect("theta lies on the sum-one hyperplane");
    assert_eq!(
        applied, epsilon,
        "reduction does not map theta to the computed point"
    );
    assert!(in_alcove(&epsilon), "reduced point is outside the alcove");
    (element, epsilon)
}
