use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Exact rational scalar used for every coordinate.
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n.trim()).map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
    let d = BigInt::from_str(d.trim()).map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

/// Always writes `n/d`, including `/1`, so files have one shape.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Nearest rational with the given denominator; only used to pick construction parameters.
pub fn approx(value: f64, den: i64) -> Rational {
    ratio((value * den as f64).round() as i64, den)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// A point of R^3 with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Point3::new(int(x), int(y), int(z))
    }

    pub fn origin() -> Self {
        Point3::from_ints(0, 0, 0)
    }

    pub fn sub(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn add(&self, o: &Point3) -> Point3 {
        Point3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn scale(&self, k: &Rational) -> Point3 {
        Point3::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn dot(&self, o: &Point3) -> Rational {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Point3) -> Point3 {
        Point3::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Point on the segment `self -> o` at parameter `t`.
    pub fn lerp(&self, o: &Point3, t: &Rational) -> Point3 {
        self.add(&o.sub(self).scale(t))
    }

    /// The shear `(x, y, z) -> (x + s z, y + s^2 z, z)`.
    pub fn sheared(&self, s: &Rational) -> Point3 {
        if s.is_zero() {
            return self.clone();
        }
        let s2 = s * s;
        Point3::new(&self.x + s * &self.z, &self.y + &s2 * &self.z, self.z.clone())
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [to_f64(&self.x), to_f64(&self.y), to_f64(&self.z)]
    }

    /// Applies a rational 3x3 matrix.
    pub fn transformed(&self, m: &[[Rational; 3]; 3]) -> Point3 {
        let c = self.coords();
        let row = |r: &[Rational; 3]| &r[0] * c[0] + &r[1] * c[1] + &r[2] * c[2];
        Point3::new(row(&m[0]), row(&m[1]), row(&m[2]))
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z)
        )
    }
}

impl FromStr for Point3 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(format!("expected three coordinates, found {}", parts.len()));
        }
        Ok(Point3::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        ))
    }
}

/// A point of the projection plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point2 {
    #[serde(with = "rational_string")]
    pub x: Rational,
    #[serde(with = "rational_string")]
    pub y: Rational,
}

/// Serializes a rational as its `n/d` string.
pub mod rational_string {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Rational point on the unit circle near angle `theta`, via the tan-half-angle map.
/// The result is exactly on the circle; only its angle is approximate.
pub fn unit_circle_point(theta: f64, den: i64) -> (Rational, Rational) {
    let two_pi = std::f64::consts::TAU;
    let mut th = theta.rem_euclid(two_pi);
    if th > std::f64::consts::PI {
        th -= two_pi;
    }
    // Stay away from t -> infinity by reflecting through the origin.
    let flip = th.abs() > std::f64::consts::FRAC_PI_2;
    if flip {
        th = if th > 0.0 { th - std::f64::consts::PI } else { th + std::f64::consts::PI };
    }
    let t = approx((th / 2.0).tan(), den);
    let one = Rational::one();
    let t2 = &t * &t;
    let denom = &one + &t2;
    let x = (&one - &t2) / &denom;
    let y = (int(2) * &t) / &denom;
    if flip {
        (-x, -y)
    } else {
        (x, y)
    }
}
