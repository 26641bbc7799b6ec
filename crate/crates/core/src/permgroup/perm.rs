use std::fmt;
use std::str::FromStr;

use crate::error::PermError;

/// A point of `{1, …, n}`, stored 0-based.
pub type Point = u32;

/// A bijection on `{0, …, n-1}`; displayed and parsed 1-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<Point>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as Point).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<Point>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let i = x as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotABijection(
                    images.iter().map(|p| p + 1).collect(),
                ));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of the given degree from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<Point>]) -> Result<Self, PermError> {
        let mut images: Vec<Point> = (0..degree as Point).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let i = p as usize;
                if i >= degree {
                    return Err(PermError::PointOutOfRange {
                        point: p + 1,
                        degree,
                    });
                }
                if touched[i] {
                    return Err(PermError::CyclesNotDisjoint(p + 1));
                }
                touched[i] = true;
                images[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` or the empty
    /// string is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self, PermError> {
        let err = |msg: &str| PermError::Parse {
            input: text.to_string(),
            reason: msg.to_string(),
        };
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = rest.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let body = &rest[..close];
            if body.contains('(') {
                return Err(err("nested '('"));
            }
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let p: Point = tok
                    .parse()
                    .map_err(|_| err("points must be positive integers"))?;
                if p == 0 {
                    return Err(PermError::PointOutOfRange { point: 0, degree });
                }
                cycle.push(p - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: Point) -> Point {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i as Point == x)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as Point;
        }
        Self { images }
    }

    /// Image of a point-set, sorted.
    pub fn image_of_set(&self, set: &[Point]) -> Vec<Point> {
        let mut out: Vec<Point> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as Point);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Splits a comma-separated generator list such as `(1 2),(1 2 3)` into
/// permutations. Commas inside parentheses are treated as point separators.
pub fn parse_generators(degree: usize, text: &str) -> Result<Vec<Permutation>, PermError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                push_generator(degree, &text[start..i], &mut out)?;
                start = i + 1;
            }
            _ => {}
        }
    }
    push_generator(degree, &text[start..], &mut out)?;
    Ok(out)
}

fn push_generator(degree: usize, piece: &str, out: &mut Vec<Permutation>) -> Result<(), PermError> {
    if !piece.trim().is_empty() {
        out.push(Permutation::parse_cycles(degree, piece)?);
    }
    Ok(())
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses cycle notation, taking the degree to be the largest point mentioned.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Self::parse_cycles(max, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            p(3, "(1 2)").compose(&p(3, "(2 3)")).unwrap(),
            p(3, "(1 2 3)")
        );
        assert_eq!(
            Permutation::identity(3).compose(&p(3, "(1 3)")).unwrap(),
            p(3, "(1 3)")
        );
        assert!(p(3, "(1 2 3)")
            .compose(&p(3, "(1 3 2)"))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        assert!(matches!(
            p(3, "(1 2)").compose(&p(4, "(1 2)")),
            Err(PermError::DegreeMismatch(3, 4))
        ));
    }

    #[test]
    fn display_and_parse() {
        let s = p(5, "(1 3 5)(2 4)");
        assert_eq!(s.to_string(), "(1 3 5)(2 4)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p(4, "(1,2)"), p(4, "(1 2)"));
        assert_eq!("(2 3)".parse::<Permutation>().unwrap().degree(), 3);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles(3, "(1 4)"),
            Err(PermError::PointOutOfRange { point: 4, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles(3, "(1 2)(2 3)"),
            Err(PermError::CyclesNotDisjoint(2))
        ));
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(a b)").is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn generator_lists() {
        let gens = parse_generators(4, "(1 2),(3 4), (1 3)(2 4)").unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[2], p(4, "(1 3)(2 4)"));
        assert!(parse_generators(3, "").unwrap().is_empty());
    }
}
