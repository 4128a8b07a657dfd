//! Lattice parameters for the three-fold symmetric Deligne-Mostow family.
//!
//! Every quantity here is exact. `l` and `d` can be infinite, so they are
//! stored as [`ExtRational`], whose reciprocal is total.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = Ratio<i64>;

/// A rational number extended by a single unsigned infinity.
///
/// A zero denominator encodes infinity; the numerator's sign is ignored there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: i64,
    den: i64,
}

impl ExtRational {
    pub const INFINITY: ExtRational = ExtRational { num: 1, den: 0 };
    pub const ZERO: ExtRational = ExtRational { num: 0, den: 1 };
    pub const ONE: ExtRational = ExtRational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Self {
        if den == 0 {
            return Self::INFINITY;
        }
        Self::from_ratio(Rational::new(num, den))
    }

    pub fn from_integer(n: i64) -> Self {
        Self { num: n, den: 1 }
    }

    pub fn from_ratio(r: Rational) -> Self {
        Self {
            num: *r.numer(),
            den: *r.denom(),
        }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn finite(&self) -> Option<Rational> {
        (!self.is_infinite()).then(|| Rational::new(self.num, self.den))
    }

    /// Reciprocal; 0 and infinity swap.
    pub fn recip(&self) -> Self {
        if self.is_infinite() {
            Self::ZERO
        } else if self.num == 0 {
            Self::INFINITY
        } else {
            Self::from_ratio(Rational::new(self.den, self.num))
        }
    }

    /// Reciprocal as a finite rational. Panics on zero.
    pub fn recip_finite(&self) -> Rational {
        self.recip()
            .finite()
            .expect("reciprocal of zero is not finite")
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            f64::INFINITY
        } else {
            self.num as f64 / self.den as f64
        }
    }

    /// `Some(n)` when the value is a finite integer `n >= 1`.
    pub fn positive_integer(&self) -> Option<u64> {
        (self.den == 1 && self.num >= 1).then_some(self.num as u64)
    }

    pub fn is_positive_finite(&self) -> bool {
        !self.is_infinite() && self.num > 0
    }
}

impl From<Rational> for ExtRational {
    fn from(r: Rational) -> Self {
        Self::from_ratio(r)
    }
}

impl From<i64> for ExtRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse `{0}` as an exact rational")]
pub struct ParseExtRationalError(pub String);

impl FromStr for ExtRational {
    type Err = ParseExtRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ParseExtRationalError(s.to_string());
        if matches!(t, "inf" | "infinity" | "∞" | "Infinity") {
            return Ok(Self::INFINITY);
        }
        match t.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| err())?;
                let d: i64 = d.trim().parse().map_err(|_| err())?;
                if d == 0 {
                    return Err(err());
                }
                Ok(Self::new(n, d))
            }
            None => t.parse::<i64>().map(Self::from_integer).map_err(|_| err()),
        }
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An angle stored exactly as a rational multiple of π.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PiAngle(pub Rational);

impl PiAngle {
    pub fn radians(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }

    pub fn fraction(&self) -> Rational {
        self.0
    }
}

impl fmt::Display for PiAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π", ExtRational::from_ratio(self.0))
    }
}

impl Serialize for PiAngle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (*self.0.numer(), *self.0.denom()).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiAngle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (n, d) = <(i64, i64)>::deserialize(deserializer)?;
        if d == 0 {
            return Err(serde::de::Error::custom("zero denominator in angle"));
        }
        Ok(PiAngle(Rational::new(n, d)))
    }
}

/// Which triples of vertices of the generic polyhedron merge for a given lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CollapseCase {
    /// No vertices merge (`p > 6`, small phase shift).
    FullD,
    /// `z3, z4, z5` merge (`p <= 6`, small phase shift).
    CollapseZ345,
    /// `z6..z8`, `z9..z11`, `z12..z14` merge (`p > 6`, large phase shift).
    CollapseThreeTriples,
    /// All four triples merge.
    CollapseAllFour,
}

impl CollapseCase {
    pub fn merges_z345(self) -> bool {
        matches!(self, Self::CollapseZ345 | Self::CollapseAllFour)
    }

    pub fn merges_outer_triples(self) -> bool {
        matches!(self, Self::CollapseThreeTriples | Self::CollapseAllFour)
    }
}

impl fmt::Display for CollapseCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::FullD => "FullD",
            Self::CollapseZ345 => "CollapseZ345",
            Self::CollapseThreeTriples => "CollapseThreeTriples",
            Self::CollapseAllFour => "CollapseAllFour",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("p must be an integer at least 3, got {0}")]
    InvalidP(String),
    #[error("k must be a positive integer or half-integer, got {0}")]
    InvalidK(String),
    #[error("(p, k) = ({p}, {k}) does not give a ball 5-tuple: mu = {mu}")]
    NotBallQuintuple { p: String, k: String, mu: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeParams {
    pub p: ExtRational,
    pub k: ExtRational,
    pub l: ExtRational,
    pub d: ExtRational,
    pub t: ExtRational,
    pub mu: [ExtRational; 5],
    pub theta: PiAngle,
    pub phi: PiAngle,
    pub collapse_case: CollapseCase,
    pub symmetric: bool,
    pub in_table: bool,
}

impl LatticeParams {
    pub fn p_int(&self) -> i64 {
        self.p.numer()
    }

    pub fn p_ratio(&self) -> Rational {
        self.p.finite().expect("p is finite")
    }

    pub fn k_ratio(&self) -> Rational {
        self.k.finite().expect("k is finite")
    }

    /// `(p, k)` formatted as in the lattice table, e.g. `(7, 7/2)`.
    pub fn label(&self) -> String {
        format!("({}, {})", self.p, self.k)
    }

    /// `k = p/2`, where the two angles coincide in the given frame.
    pub fn angles_equal(&self) -> bool {
        self.k_ratio() * 2 == self.p_ratio()
    }

    /// The five cone angles `(π−θ+2φ, π+θ, π+θ, π+θ, 2π−2θ−2φ)`.
    pub fn cone_angles(&self) -> [PiAngle; 5] {
        let one = Rational::one();
        let th = self.theta.0;
        let ph = self.phi.0;
        [
            PiAngle(one - th + ph * 2),
            PiAngle(one + th),
            PiAngle(one + th),
            PiAngle(one + th),
            PiAngle(one * 2 - th * 2 - ph * 2),
        ]
    }

    pub fn mu_ratios(&self) -> [Rational; 5] {
        self.mu.map(|m| m.finite().expect("mu is finite"))
    }
}

/// One row of the lattice table: `p`, `k = k_num/k_den`, and its group (1 to 5).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub p: i64,
    pub k_num: i64,
    pub k_den: i64,
    pub group: u8,
}

impl TableEntry {
    pub const fn new(p: i64, k_num: i64, k_den: i64, group: u8) -> Self {
        Self {
            p,
            k_num,
            k_den,
            group,
        }
    }

    pub fn k(&self) -> Rational {
        Rational::new(self.k_num, self.k_den)
    }

    pub fn params(&self) -> LatticeParams {
        derive_params(Rational::from_integer(self.p), self.k()).expect("table rows are valid")
    }
}

/// The 39 lattices with three-fold symmetry, in table order.
pub const TABLE: [TableEntry; 39] = [
    TableEntry::new(3, 4, 1, 1),
    TableEntry::new(3, 5, 1, 1),
    TableEntry::new(3, 6, 1, 1),
    TableEntry::new(4, 3, 1, 1),
    TableEntry::new(4, 4, 1, 1),
    TableEntry::new(5, 2, 1, 1),
    TableEntry::new(5, 5, 2, 1),
    TableEntry::new(5, 3, 1, 1),
    TableEntry::new(6, 2, 1, 1),
    TableEntry::new(6, 3, 1, 1),
    TableEntry::new(3, 7, 1, 2),
    TableEntry::new(3, 8, 1, 2),
    TableEntry::new(3, 9, 1, 2),
    TableEntry::new(3, 10, 1, 2),
    TableEntry::new(3, 12, 1, 2),
    TableEntry::new(4, 5, 1, 2),
    TableEntry::new(4, 6, 1, 2),
    TableEntry::new(4, 8, 1, 2),
    TableEntry::new(5, 4, 1, 2),
    TableEntry::new(5, 5, 1, 2),
    TableEntry::new(6, 4, 1, 2),
    TableEntry::new(6, 6, 1, 2),
    TableEntry::new(7, 2, 1, 3),
    TableEntry::new(8, 2, 1, 3),
    TableEntry::new(9, 2, 1, 3),
    TableEntry::new(10, 2, 1, 3),
    TableEntry::new(12, 2, 1, 3),
    TableEntry::new(18, 2, 1, 3),
    TableEntry::new(7, 3, 1, 4),
    TableEntry::new(8, 3, 1, 4),
    TableEntry::new(9, 3, 1, 4),
    TableEntry::new(10, 3, 1, 4),
    TableEntry::new(12, 3, 1, 4),
    TableEntry::new(18, 3, 1, 4),
    TableEntry::new(7, 7, 2, 5),
    TableEntry::new(8, 4, 1, 5),
    TableEntry::new(9, 9, 2, 5),
    TableEntry::new(10, 5, 1, 5),
    TableEntry::new(12, 4, 1, 5),
];

pub fn table_params() -> Vec<LatticeParams> {
    TABLE.iter().map(TableEntry::params).collect()
}

pub fn find_table_entry(p: Rational, k: Rational) -> Option<&'static TableEntry> {
    TABLE
        .iter()
        .find(|e| Rational::from_integer(e.p) == p && e.k() == k)
}

/// Derive every parameter of the lattice `(p, k)` exactly.
pub fn derive_params(p: Rational, k: Rational) -> Result<LatticeParams, ParamError> {
    if !p.is_integer() || p < Rational::from_integer(3) {
        return Err(ParamError::InvalidP(ExtRational::from_ratio(p).to_string()));
    }
    if !k.is_positive() || *k.denom() > 2 {
        return Err(ParamError::InvalidK(ExtRational::from_ratio(k).to_string()));
    }
    let half = Rational::new(1, 2);
    let ip = p.recip();
    let ik = k.recip();
    let mu = [half + ip - ik, half - ip, half - ip, half - ip, ip * 2 + ik];
    if !ball_quintuple_check(&mu) {
        return Err(ParamError::NotBallQuintuple {
            p: ExtRational::from_ratio(p).to_string(),
            k: ExtRational::from_ratio(k).to_string(),
            mu: mu
                .iter()
                .map(|m| ExtRational::from_ratio(*m).to_string())
                .collect::<Vec<_>>()
                .join(", "),
        });
    }
    let l = ExtRational::from_ratio(half - ip - ik).recip();
    let d = ExtRational::from_ratio(half - ip * 3).recip();
    let t = ExtRational::from_ratio(-half + ip + ik * 2);
    let collapse_case = classify_pk(p, k);
    let symmetric = k * 2 == p || l.finite().is_some_and(|l| l * 2 == p);
    Ok(LatticeParams {
        p: p.into(),
        k: k.into(),
        l,
        d,
        t,
        mu: mu.map(ExtRational::from_ratio),
        theta: PiAngle(ip * 2),
        phi: PiAngle(ik),
        collapse_case,
        symmetric,
        in_table: find_table_entry(p, k).is_some(),
    })
}

/// Parse `p` and `k` from strings such as `"7"` and `"7/2"`.
pub fn derive_params_str(p: &str, k: &str) -> Result<LatticeParams, ParamError> {
    let p_val = p
        .parse::<ExtRational>()
        .ok()
        .and_then(|v| v.finite())
        .ok_or_else(|| ParamError::InvalidP(p.to_string()))?;
    let k_val = k
        .parse::<ExtRational>()
        .ok()
        .and_then(|v| v.finite())
        .ok_or_else(|| ParamError::InvalidK(k.to_string()))?;
    derive_params(p_val, k_val)
}

pub fn classify(params: &LatticeParams) -> CollapseCase {
    classify_pk(params.p_ratio(), params.k_ratio())
}

/// Equality in either threshold goes to the collapsed side.
pub fn classify_pk(p: Rational, k: Rational) -> CollapseCase {
    let large_p = p > Rational::from_integer(6);
    let threshold = p * 2 / (p - 2);
    let small_shift = k > threshold;
    match (large_p, small_shift) {
        (true, true) => CollapseCase::FullD,
        (false, true) => CollapseCase::CollapseZ345,
        (true, false) => CollapseCase::CollapseThreeTriples,
        (false, false) => CollapseCase::CollapseAllFour,
    }
}

/// True iff the five values sum to 2 and each lies strictly between 0 and 1.
pub fn ball_quintuple_check(mu: &[Rational; 5]) -> bool {
    let sum: Rational = mu.iter().copied().sum();
    sum == Rational::from_integer(2) && mu.iter().all(|m| m.is_positive() && *m < Rational::one())
}

/// Cone curvatures `2π·μ`.
pub fn curvatures(mu: &[Rational; 5]) -> [PiAngle; 5] {
    mu.map(|m| PiAngle(m * 2))
}

/// Cone angles `2π − 2π·μ`.
pub fn cone_angles_from_mu(mu: &[Rational; 5]) -> [PiAngle; 5] {
    mu.map(|m| PiAngle((Rational::one() - m) * 2))
}

/// The orbifold Euler characteristic in closed form, `(p²+12p−60)/(16p²) − t²/4`.
pub fn euler_closed_form(params: &LatticeParams) -> Rational {
    let p = params.p_ratio();
    let t = params.t.finite().expect("t is finite");
    (p * p + p * 12 - 60) / (p * p * 16) - t * t / 4
}

/// Absolute value helper for rationals that keeps the call sites short.
pub fn rabs(r: Rational) -> Rational {
    if r < Rational::zero() {
        -r
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn ext_rational_reciprocals() {
        assert_eq!(ExtRational::ZERO.recip(), ExtRational::INFINITY);
        assert_eq!(ExtRational::INFINITY.recip(), ExtRational::ZERO);
        assert_eq!(
            ExtRational::new(-3, 6).recip(),
            ExtRational::from_integer(-2)
        );
        assert_eq!(ExtRational::new(5, 0), ExtRational::INFINITY);
        assert_eq!(ExtRational::new(-5, 0), ExtRational::INFINITY);
    }

    #[test]
    fn ext_rational_lowest_terms() {
        let x = ExtRational::new(6, -4);
        assert_eq!((x.numer(), x.denom()), (-3, 2));
    }

    #[test]
    fn ext_rational_parse_and_display() {
        for s in ["7/2", "-12", "inf", "0", "1/12"] {
            let v: ExtRational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("∞".parse::<ExtRational>().unwrap(), ExtRational::INFINITY);
        assert!("1/0".parse::<ExtRational>().is_err());
        assert!("x".parse::<ExtRational>().is_err());
    }

    #[test]
    fn ext_rational_serde_roundtrip() {
        let v = vec![
            ExtRational::INFINITY,
            ExtRational::new(7, 2),
            ExtRational::from(-4),
        ];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["inf","7/2","-4"]"#);
        let back: Vec<ExtRational> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn derive_four_six() {
        let q = derive_params(r(4, 1), r(6, 1)).unwrap();
        assert_eq!(q.mu[0], ExtRational::new(7, 12));
        assert_eq!(q.mu[1], ExtRational::new(1, 4));
        assert_eq!(q.mu[4], ExtRational::new(2, 3));
        assert_eq!(q.l, ExtRational::from(12));
        assert_eq!(q.d, ExtRational::from(-4));
        assert_eq!(q.t, ExtRational::new(1, 12));
        assert_eq!(q.collapse_case, CollapseCase::CollapseZ345);
    }

    #[test]
    fn derive_three_six_has_infinite_l() {
        let q = derive_params(r(3, 1), r(6, 1)).unwrap();
        assert!(q.l.is_infinite());
        assert_eq!(q.d, ExtRational::from(-2));
        assert_eq!(q.t, ExtRational::new(1, 6));
    }

    #[test]
    fn derive_ten_five_is_symmetric() {
        let q = derive_params(r(10, 1), r(5, 1)).unwrap();
        assert_eq!((q.l, q.d, q.t), (5.into(), 5.into(), ExtRational::ZERO));
        assert!(q.symmetric);
        assert!(q.angles_equal());
    }

    #[test]
    fn derive_rejects_bad_input() {
        assert!(matches!(
            derive_params(r(2, 1), r(3, 1)),
            Err(ParamError::InvalidP(_))
        ));
        assert!(matches!(
            derive_params(r(7, 2), r(3, 1)),
            Err(ParamError::InvalidP(_))
        ));
        assert!(matches!(
            derive_params(r(5, 1), r(0, 1)),
            Err(ParamError::InvalidK(_))
        ));
        assert!(matches!(
            derive_params(r(5, 1), r(7, 3)),
            Err(ParamError::InvalidK(_))
        ));
        // mu5 = 2/3 + 1/1 >= 1
        assert!(matches!(
            derive_params(r(3, 1), r(1, 1)),
            Err(ParamError::NotBallQuintuple { .. })
        ));
    }

    #[test]
    fn off_table_pairs_are_flagged() {
        let q = derive_params(r(11, 1), r(4, 1)).unwrap();
        assert!(!q.in_table);
        assert!(TABLE[0].params().in_table);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_pk(r(8, 1), r(3, 1)), CollapseCase::FullD);
        assert_eq!(classify_pk(r(5, 1), r(5, 1)), CollapseCase::CollapseZ345);
        assert_eq!(classify_pk(r(4, 1), r(4, 1)), CollapseCase::CollapseAllFour);
        assert_eq!(classify_pk(r(6, 1), r(3, 1)), CollapseCase::CollapseAllFour);
        assert_eq!(
            classify_pk(r(7, 1), r(2, 1)),
            CollapseCase::CollapseThreeTriples
        );
    }

    #[test]
    fn classify_matches_table_groups() {
        for e in TABLE.iter() {
            let want = match e.group {
                1 => CollapseCase::CollapseAllFour,
                2 => CollapseCase::CollapseZ345,
                3 => CollapseCase::CollapseThreeTriples,
                _ => CollapseCase::FullD,
            };
            assert_eq!(e.params().collapse_case, want, "row {:?}", e);
        }
    }

    #[test]
    fn symmetric_rows() {
        let mut sym: Vec<_> = TABLE
            .iter()
            .filter(|e| e.params().symmetric)
            .map(|e| (e.p, e.k_num, e.k_den))
            .collect();
        sym.sort();
        assert_eq!(
            sym,
            vec![
                (5, 5, 2),
                (6, 3, 1),
                (7, 7, 2),
                (8, 4, 1),
                (9, 9, 2),
                (10, 5, 1),
                (12, 4, 1),
                (18, 3, 1)
            ]
        );
    }

    #[test]
    fn ball_quintuples() {
        let q = derive_params(r(4, 1), r(6, 1)).unwrap();
        assert!(ball_quintuple_check(&q.mu_ratios()));
        let half = r(1, 2);
        assert!(!ball_quintuple_check(&[half, half, half, half, r(0, 1)]));
        for e in TABLE.iter() {
            assert!(ball_quintuple_check(&e.params().mu_ratios()));
        }
    }

    #[test]
    fn cone_angles_four_six() {
        let q = derive_params(r(4, 1), r(6, 1)).unwrap();
        let want = [r(5, 6), r(3, 2), r(3, 2), r(3, 2), r(2, 3)];
        assert_eq!(q.cone_angles().map(|a| a.0), want);
        assert_eq!(cone_angles_from_mu(&q.mu_ratios()).map(|a| a.0), want);
    }

    #[test]
    fn euler_closed_form_examples() {
        let q = derive_params(r(10, 1), r(5, 1)).unwrap();
        assert_eq!(euler_closed_form(&q), r(1, 10));
        let q = derive_params(r(6, 1), r(6, 1)).unwrap();
        assert_eq!(euler_closed_form(&q), r(1, 12));
    }
}
