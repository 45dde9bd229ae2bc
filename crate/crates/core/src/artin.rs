//! Words in the Artin group of a Coxeter diagram and their projections to
//! the Weyl group.
//!
//! The Artin group itself has no solvable-normal-form machinery here: all
//! verification happens in the finite quotient W, where the generators
//! become involutions. Words print and parse as `"t1 t2 t1^-1"`.

use std::fmt;
use std::str::FromStr;

use crate::roots::{RootSystem, WeylElement};
use crate::{Error, Result};

/// A word in the Artin generators `t_i`, as (generator index, ±1) letters.
/// Indices are 0-based internally and 1-based in the printed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinWord {
    pub letters: Vec<(usize, i8)>,
}

impl ArtinWord {
    pub fn identity() -> ArtinWord {
        ArtinWord { letters: vec![] }
    }

    pub fn generator(i: usize) -> ArtinWord {
        ArtinWord { letters: vec![(i, 1)] }
    }

    pub fn from_positive_word(indices: &[usize]) -> ArtinWord {
        ArtinWord { letters: indices.iter().map(|&i| (i, 1)).collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        ArtinWord { letters }
    }

    pub fn inverse(&self) -> ArtinWord {
        ArtinWord {
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> ArtinWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        ArtinWord { letters }
    }

    /// Cancels adjacent inverse pairs until stable; idempotent.
    pub fn free_reduce(&self) -> ArtinWord {
        let mut stack: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &(i, e) in &self.letters {
            if let Some(&(j, f)) = stack.last() {
                if i == j && e == -f {
                    stack.pop();
                    continue;
                }
            }
            stack.push((i, e));
        }
        ArtinWord { letters: stack }
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| {
                if e >= 0 {
                    format!("t{}", i + 1)
                } else {
                    format!("t{}^-1", i + 1)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for ArtinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<ArtinWord> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let rest = tok
                .strip_prefix('t')
                .ok_or_else(|| Error::Parse(format!("expected generator token, got `{tok}`")))?;
            let (num, exp) = match rest.split_once('^') {
                Some((n, "-1")) => (n, -1),
                Some((n, "1")) => (n, 1),
                Some((_, e)) => {
                    return Err(Error::Parse(format!("unsupported exponent `{e}` in `{tok}`")))
                }
                None => (rest, 1),
            };
            let idx: usize = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in `{tok}`")))?;
            if idx == 0 {
                return Err(Error::Parse("generator indices are 1-based".into()));
            }
            letters.push((idx - 1, exp));
        }
        Ok(ArtinWord { letters })
    }
}

/// Projects a word to the Weyl group under `t_i ↦ s_i` (exponent signs are
/// irrelevant in W since `s_i² = 1`).
pub fn project_to_weyl(rs: &RootSystem, w: &ArtinWord) -> Result<WeylElement> {
    let mut out = WeylElement::identity(rs.rank());
    for &(i, _) in &w.letters {
        out = out.compose(&rs.simple_reflection(i)?);
    }
    Ok(out)
}

/// The Artin-Coxeter element `Π = t_1 ⋯ t_n`.
pub fn artin_coxeter_element(rank: usize) -> ArtinWord {
    ArtinWord::from_positive_word(&(0..rank).collect::<Vec<_>>())
}

/// The Garside element as a positive word: any reduced word of the longest
/// element `w_0`. Only the projection to W is contractual.
pub fn garside_element(rs: &RootSystem) -> ArtinWord {
    let w0 = rs.longest_element();
    ArtinWord::from_positive_word(w0.word.as_deref().expect("longest element carries its word"))
}

/// The class of a small simple loop around the origin in the Weyl cover:
/// `Π^h` with `h` the Coxeter number (up to conjugacy). Its projection to W
/// is the identity.
pub fn generic_origin_loop(rs: &RootSystem) -> ArtinWord {
    let h = rs
        .coxeter_element()
        .order(4 * rs.rank() as u64 + 4)
        .expect("Coxeter element has finite order");
    artin_coxeter_element(rs.rank()).pow(h as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, AdeType};

    #[test]
    fn free_reduction() {
        let w: ArtinWord = "t1 t2 t2^-1 t1 t1^-1 t1^-1".parse().unwrap();
        assert_eq!(w.free_reduce(), ArtinWord::identity());
        let v: ArtinWord = "t1 t2 t1^-1".parse().unwrap();
        assert_eq!(v.free_reduce(), v);
        assert_eq!(v.free_reduce().free_reduce(), v.free_reduce());
    }

    #[test]
    fn display_parse_roundtrip() {
        let w: ArtinWord = "t1 t2 t1^-1".parse().unwrap();
        assert_eq!(w.to_string(), "t1 t2 t1^-1");
        assert_eq!(w.to_string().parse::<ArtinWord>().unwrap(), w);
        assert_eq!(ArtinWord::identity().to_string(), "e");
    }

    #[test]
    fn projection_basics() {
        let rs = build_root_system(AdeType::a(2));
        let id = project_to_weyl(&rs, &ArtinWord::identity()).unwrap();
        assert!(id.is_identity());
        let sq: ArtinWord = "t1 t1".parse().unwrap();
        assert!(project_to_weyl(&rs, &sq).unwrap().is_identity());
        let pi: ArtinWord = "t1 t2".parse().unwrap();
        let c = project_to_weyl(&rs, &pi).unwrap();
        assert_eq!(c.order(10), Some(3));
        let bad: ArtinWord = "t5".parse().unwrap();
        assert!(project_to_weyl(&rs, &bad).is_err());
    }

    #[test]
    fn artin_coxeter_words() {
        assert_eq!(artin_coxeter_element(1).to_string(), "t1");
        assert_eq!(artin_coxeter_element(2).to_string(), "t1 t2");
        let rs = build_root_system(AdeType::e(6));
        let pi = artin_coxeter_element(6);
        let c = project_to_weyl(&rs, &pi).unwrap();
        assert_eq!(c.order(100), Some(12));
    }

    #[test]
    fn garside_projects_to_w0() {
        for t in [AdeType::a(1), AdeType::a(2), AdeType::d(4), AdeType::e(6)] {
            let rs = build_root_system(t);
            let d = garside_element(&rs);
            assert_eq!(d.len(), rs.num_positive_roots());
            assert!(d.letters.iter().all(|&(_, e)| e == 1));
            let proj = project_to_weyl(&rs, &d).unwrap();
            assert_eq!(proj.matrix, rs.longest_element().matrix);
        }
    }

    #[test]
    fn origin_loop_is_pure() {
        // Π^h projects to the identity for every type of rank ≤ 6
        let mut types: Vec<AdeType> = (1..=6).map(AdeType::a).collect();
        types.extend((4..=6).map(AdeType::d));
        types.push(AdeType::e(6));
        for t in types {
            let rs = build_root_system(t);
            let sigma = generic_origin_loop(&rs);
            assert!(project_to_weyl(&rs, &sigma).unwrap().is_identity(), "{t}");
        }
    }

    #[test]
    fn origin_loop_a1_a2() {
        assert_eq!(generic_origin_loop(&build_root_system(AdeType::a(1))).to_string(), "t1 t1");
        let a2 = generic_origin_loop(&build_root_system(AdeType::a(2)));
        assert_eq!(a2.to_string(), "t1 t2 t1 t2 t1 t2"); // (t1 t2)^3, h = 3
    }

    #[test]
    fn garside_square_is_origin_loop_in_w() {
        // W-shadow of the braid identity: proj(D)^2 = 1 = proj(Π^h)
        for t in [AdeType::a(2), AdeType::a(3), AdeType::d(4), AdeType::e(6)] {
            let rs = build_root_system(t);
            let d = project_to_weyl(&rs, &garside_element(&rs)).unwrap();
            let d2 = d.compose(&d);
            assert!(d2.is_identity());
            let loop_img = project_to_weyl(&rs, &generic_origin_loop(&rs)).unwrap();
            assert_eq!(d2.matrix, loop_img.matrix);
        }
    }

    #[test]
    fn half_loop_conjugate_to_w0_when_h_even() {
        // proj(Π^{h/2}) is W-conjugate to w0 for h even, rank ≤ 5 here
        // (E6 is exercised by the acceptance suite)
        for t in [AdeType::a(1), AdeType::a(3), AdeType::d(4), AdeType::d(5), AdeType::a(5)] {
            let rs = build_root_system(t);
            let h = crate::roots::coxeter_number(t);
            assert_eq!(h % 2, 0);
            let half = project_to_weyl(&rs, &artin_coxeter_element(rs.rank()).pow(h as usize / 2))
                .unwrap();
            let w0 = rs.longest_element();
            assert!(rs.conjugate_in_group(&half, &w0), "c^(h/2) not conjugate to w0 for {t}");
        }
    }
}
