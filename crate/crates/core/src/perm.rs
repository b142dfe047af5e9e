//! Permutations of `{0, …, n-1}` acting on the right.
//!
//! A permutation stores its image sequence. Products follow the exponent
//! convention used throughout the crate: `α^(pq) = (α^p)^q`, so `p * q`
//! applies `p` first.
//!
//! Text formats are 1-based cycle notation, for example `(1 2 3)(4 5)`.
//! The identity prints as `()`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its 0-based image sequence.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in &images {
            if i >= degree || seen[i] {
                return Err(Error::NotBijection { degree });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if used[p] {
                    return Err(Error::NotBijection { degree });
                }
                used[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The image `point^self`.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().compose_unchecked(self).compose_unchecked(other)
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            exp >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Element order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .fold(1, |acc, c| acc / gcd(acc, c.len() as u64) * c.len() as u64)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Points moved by the permutation, increasing.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] != i).collect()
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`.
    ///
    /// Points inside a cycle may be separated by whitespace or commas. The
    /// empty string and `()` both denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let err = |position: usize, message: &str| Error::Parse {
            position,
            message: message.to_string(),
        };
        let bytes = text.as_bytes();
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut pos = 0;
        while pos < bytes.len() {
            let c = bytes[pos];
            if c.is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            if c != b'(' {
                return Err(err(pos, "expected '('"));
            }
            pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
                    pos += 1;
                }
                if pos >= bytes.len() {
                    return Err(err(pos, "unterminated cycle"));
                }
                if bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(err(pos, "expected a point"));
                }
                let value: usize = text[start..pos]
                    .parse()
                    .map_err(|_| err(start, "point does not fit in usize"))?;
                if value == 0 || value > degree {
                    return Err(err(start, &format!("point {value} outside 1..={degree}")));
                }
                let p = value - 1;
                if used[p] {
                    return Err(err(start, &format!("repeated point {value}")));
                }
                used[p] = true;
                cycle.push(p);
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// 1-based cycle notation; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&parts.join(" "));
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self.to_cycle_string())
    }
}

/// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

/// A finite set of labelled points, identified with `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    labels: Vec<String>,
}

impl Domain {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::InvalidArgument("domain labels must be distinct".into()));
        }
        Ok(Domain { labels })
    }

    /// Points labelled `1..=n`.
    pub fn natural(n: usize) -> Self {
        Domain {
            labels: (1..=n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let q = p("(1 3 5)(2 4)", 5);
        assert_eq!(Permutation::identity(5).compose(&q).unwrap(), q);
        assert_eq!(q.compose(&Permutation::identity(5)).unwrap(), q);
    }

    #[test]
    fn product_acts_on_the_right() {
        // (1 2 3) then (1 2): 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2.
        let prod = p("(1 2 3)", 3).compose(&p("(1 2)", 3)).unwrap();
        assert_eq!(prod, p("(2 3)", 3));
    }

    #[test]
    fn inverse_law() {
        let q = p("(1 4 2)(3 5 6)", 6);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let e = p("(1 2)", 2).compose(&p("(1 2)", 3)).unwrap_err();
        assert_eq!(e, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1 2 3)(4 5)", 5).images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p("()", 4), Permutation::identity(4));
        assert_eq!(p("", 4), Permutation::identity(4));
        assert_eq!(p("(1,2,3)", 3), p("(1 2 3)", 3));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Permutation::parse_cycles("(1 1 2)", 3) {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 3);
                assert!(message.contains("repeated"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Permutation::parse_cycles("(1 4)", 3),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 2", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("1 2)", 3),
            Err(Error::Parse { position: 0, .. })
        ));
    }

    #[test]
    fn printing() {
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p("(4 5)(3 1 2)", 5).to_string(), "(1 2 3)(4 5)");
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn element_order_and_parity() {
        let q = p("(1 2 3)(4 5)", 5);
        assert_eq!(q.order(), 6);
        assert!(!q.is_even());
        assert!(q.pow(6).is_identity());
    }

    #[test]
    fn domain_labels_must_be_distinct() {
        assert!(Domain::new(vec!["a".into(), "a".into()]).is_err());
        assert_eq!(Domain::natural(3).label(2), "3");
    }
}
