//! Plain-text interchange format for gluing tables.
//!
//! ```text
//! tets 2
//! 0: 1(0123) 1(1230) - 1(3120)
//! 1: 0(0123) - 0(3012) 0(1302)
//! ```
//!
//! Line `t: e0 e1 e2 e3` lists the gluings of faces 0..4 of tetrahedron `t`;
//! an entry is `-` for a boundary triangle, or `dest(abcd)` where `abcd` are
//! the images of vertices 0123 under the gluing permutation.  Blank lines and
//! lines starting with `#` are ignored.  `Triangulation::from_text` also
//! accepts an isomorphism signature in place of a table.

use super::{IsoSignature, Triangulation};
use crate::perm::Perm4;

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("gluing table is not a valid involution: {0}")]
    Pairing(#[from] super::GluingError),
    #[error("bad isomorphism signature: {0}")]
    Signature(String),
}

impl Triangulation {
    pub fn to_text(&self) -> String {
        let mut out = format!("tets {}\n", self.size());
        for t in 0..self.size() {
            out.push_str(&format!("{t}:"));
            for f in 0..4u8 {
                match self.gluing(t, f) {
                    None => out.push_str(" -"),
                    Some(g) => {
                        let img = g.perm.images();
                        out.push_str(&format!(
                            " {}({}{}{}{})",
                            g.tet, img[0], img[1], img[2], img[3]
                        ));
                    }
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses a gluing table, or an isomorphism signature when the input is a
    /// single token that does not start with `tets`.
    pub fn from_text(text: &str) -> Result<Triangulation, ParseError> {
        let meaningful: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if meaningful.len() == 1 && !meaningful[0].1.starts_with("tets") {
            let sig = meaningful[0].1;
            return IsoSignature::parse_str(sig)
                .map_err(|e| ParseError::Signature(e.to_string()));
        }
        let (first_line, header) = meaningful
            .first()
            .copied()
            .ok_or_else(|| ParseError::Syntax {
                line: 0,
                msg: "empty input".into(),
            })?;
        let n: usize = header
            .strip_prefix("tets")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| ParseError::Syntax {
                line: first_line,
                msg: format!("expected `tets <n>`, found `{header}`"),
            })?;
        if meaningful.len() != n + 1 {
            return Err(ParseError::Syntax {
                line: first_line,
                msg: format!("expected {n} tetrahedron lines, found {}", meaningful.len() - 1),
            });
        }

        let mut entries: Vec<[Option<(usize, Perm4)>; 4]> = vec![[None; 4]; n];
        for (line, text) in &meaningful[1..] {
            let (idx, rest) = text.split_once(':').ok_or_else(|| ParseError::Syntax {
                line: *line,
                msg: "expected `t: e0 e1 e2 e3`".into(),
            })?;
            let t: usize = idx.trim().parse().map_err(|_| ParseError::Syntax {
                line: *line,
                msg: format!("bad tetrahedron index `{idx}`"),
            })?;
            if t >= n {
                return Err(ParseError::Syntax {
                    line: *line,
                    msg: format!("tetrahedron index {t} out of range"),
                });
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(ParseError::Syntax {
                    line: *line,
                    msg: format!("expected 4 face entries, found {}", fields.len()),
                });
            }
            for (f, field) in fields.iter().enumerate() {
                if *field == "-" {
                    continue;
                }
                let (dest, perm) = parse_entry(field).ok_or_else(|| ParseError::Syntax {
                    line: *line,
                    msg: format!("bad face entry `{field}`"),
                })?;
                if dest >= n {
                    return Err(ParseError::Syntax {
                        line: *line,
                        msg: format!("destination {dest} out of range"),
                    });
                }
                entries[t][f] = Some((dest, perm));
            }
        }

        let mut tri = Triangulation::new(n);
        for (t, row) in entries.iter().enumerate() {
            for (f, entry) in row.iter().enumerate() {
                if let Some((dest, perm)) = entry {
                    if tri.gluing(t, f as u8).is_some() {
                        // installed by the partner entry; verify it matches
                        let have = tri.gluing(t, f as u8).unwrap();
                        if have.tet != *dest || have.perm != *perm {
                            return Err(ParseError::Pairing(
                                super::GluingError::FaceMismatch {
                                    face: f as u8,
                                    to_face: perm.apply(f as u8),
                                    perm: *perm,
                                },
                            ));
                        }
                        continue;
                    }
                    tri.join(t, f as u8, *dest, *perm)?;
                }
            }
        }
        // Every declared entry must have had a matching partner entry.
        for (t, row) in entries.iter().enumerate() {
            for (f, entry) in row.iter().enumerate() {
                if entry.is_none() != tri.gluing(t, f as u8).is_none() {
                    return Err(ParseError::Syntax {
                        line: 0,
                        msg: format!(
                            "face ({t}, {f}) is glued from one side only"
                        ),
                    });
                }
            }
        }
        tri.validate_pairing()?;
        Ok(tri)
    }
}

fn parse_entry(field: &str) -> Option<(usize, Perm4)> {
    let open = field.find('(')?;
    if !field.ends_with(')') {
        return None;
    }
    let dest: usize = field[..open].parse().ok()?;
    let digits = &field[open + 1..field.len() - 1];
    if digits.len() != 4 {
        return None;
    }
    let mut img = [0u8; 4];
    for (i, c) in digits.chars().enumerate() {
        img[i] = c.to_digit(10)? as u8;
        if img[i] > 3 {
            return None;
        }
    }
    let mut seen = [false; 4];
    for &v in &img {
        if seen[v as usize] {
            return None;
        }
        seen[v as usize] = true;
    }
    Some((dest, Perm4::from_images(img)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_table() {
        let mut tri = Triangulation::new(2);
        tri.join(0, 0, 1, Perm4::from_images([1, 0, 2, 3])).unwrap();
        tri.join(0, 1, 1, Perm4::from_images([2, 1, 3, 0])).unwrap();
        let text = tri.to_text();
        let back = Triangulation::from_text(&text).unwrap();
        assert_eq!(tri, back);
    }

    #[test]
    fn rejects_one_sided_gluing() {
        let text = "tets 2\n0: 1(0123) - - -\n1: - - - -\n";
        assert!(Triangulation::from_text(text).is_err());
    }

    #[test]
    fn rejects_involution_violation() {
        // 0 claims perm 1023 but 1 claims a non-inverse perm back.
        let text = "tets 2\n0: 1(1023) - - -\n1: 0(2310) - - -\n";
        assert!(Triangulation::from_text(text).is_err());
    }

    #[test]
    fn rejects_identity_self_gluing() {
        let text = "tets 1\n0: 0(0123) - - -\n";
        assert!(Triangulation::from_text(text).is_err());
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text = "# comment\n\ntets 1\n# another\n0: - - - -\n";
        let tri = Triangulation::from_text(text).unwrap();
        assert_eq!(tri.size(), 1);
    }
}
