//! Text formats for triangulations.
//!
//! The canonical gluing table has one line per tetrahedron with four
//! whitespace-separated entries, one per face: `t:f:pppp` (target
//! tetrahedron, target face, permutation images) or `-` for a boundary face.
//! Lines starting with `#` are comments. Isomorphism signatures in the usual
//! base-64 census encoding are accepted as an alternate input.

use crate::error::{Error, Result};
use crate::perm::Perm4;
use crate::triangulation::{Gluing, Triangulation};

/// Serialises to the canonical gluing table (newline-terminated lines).
pub fn to_gluing_table(tri: &Triangulation) -> String {
    let mut out = String::new();
    for faces in tri.gluings() {
        let row: Vec<String> = faces
            .iter()
            .enumerate()
            .map(|(f, g)| match g {
                None => "-".to_string(),
                Some(g) => format!("{}:{}:{}", g.tet, g.perm.apply(f), g.perm),
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a gluing table. `first_line` is the line number of the first
/// line of `text`, used for diagnostics.
pub fn parse_gluing_table(text: &str, first_line: usize) -> Result<Triangulation> {
    let mut rows: Vec<[Option<Gluing>; 4]> = Vec::new();
    let mut row_lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = first_line + k;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        rows.push(parse_row(line, line_no, rows.len())?);
        row_lines.push(line_no);
    }
    build_from_rows(rows, &row_lines)
}

/// Parses a single-line table whose rows are separated by `;`.
pub fn parse_inline_table(text: &str, line_no: usize) -> Result<Triangulation> {
    let mut rows = Vec::new();
    let mut row_lines = Vec::new();
    for part in text.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        rows.push(parse_row(part, line_no, rows.len())?);
        row_lines.push(line_no);
    }
    build_from_rows(rows, &row_lines)
}

fn build_from_rows(rows: Vec<[Option<Gluing>; 4]>, row_lines: &[usize]) -> Result<Triangulation> {
    let n = rows.len();
    for (t, row) in rows.iter().enumerate() {
        for g in row.iter().flatten() {
            if g.tet >= n {
                return Err(Error::Parse {
                    line: row_lines[t],
                    message: format!("tetrahedron {} does not exist ({} rows)", g.tet, n),
                });
            }
        }
    }
    Triangulation::new(rows).map_err(|e| {
        let line = match &e {
            Error::FaceGluedToSelf { tet, .. } | Error::NonInvolutiveGluing { tet, .. } => {
                row_lines.get(*tet).copied().unwrap_or(0)
            }
            _ => row_lines.first().copied().unwrap_or(0),
        };
        Error::Parse {
            line,
            message: e.to_string(),
        }
    })
}

fn parse_row(line: &str, line_no: usize, tet: usize) -> Result<[Option<Gluing>; 4]> {
    let entries: Vec<&str> = line.split_whitespace().collect();
    let err = |message: String| Error::Parse { line: line_no, message };
    if entries.len() != 4 {
        return Err(err(format!(
            "tetrahedron {tet}: expected 4 face entries, found {}",
            entries.len()
        )));
    }
    let mut row = [None; 4];
    for (f, entry) in entries.iter().enumerate() {
        if *entry == "-" {
            continue;
        }
        let parts: Vec<&str> = entry.split(':').collect();
        if parts.len() != 3 {
            return Err(err(format!("face {f}: malformed entry `{entry}`")));
        }
        let target: usize = parts[0]
            .parse()
            .map_err(|_| err(format!("face {f}: bad tetrahedron index `{}`", parts[0])))?;
        let face: usize = parts[1]
            .parse()
            .ok()
            .filter(|x| *x < 4)
            .ok_or_else(|| err(format!("face {f}: bad face index `{}`", parts[1])))?;
        let digits: Vec<u8> = parts[2]
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<Vec<u8>>>()
            .filter(|d| d.len() == 4)
            .ok_or_else(|| err(format!("face {f}: bad permutation `{}`", parts[2])))?;
        let perm = Perm4::new([digits[0], digits[1], digits[2], digits[3]])
            .ok_or_else(|| err(format!("face {f}: `{}` is not a permutation", parts[2])))?;
        if perm.apply(f) != face {
            return Err(err(format!(
                "face {f}: permutation {perm} sends face {f} to {}, not {face}",
                perm.apply(f)
            )));
        }
        row[f] = Some(Gluing { tet: target, perm });
    }
    Ok(row)
}

fn sig_value(c: u8) -> Option<usize> {
    match c {
        b'a'..=b'z' => Some((c - b'a') as usize),
        b'A'..=b'Z' => Some((c - b'A') as usize + 26),
        b'0'..=b'9' => Some((c - b'0') as usize + 52),
        b'+' => Some(62),
        b'-' => Some(63),
        _ => None,
    }
}

/// True if `s` is made only of isomorphism-signature characters.
pub fn looks_like_isosig(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|c| sig_value(c).is_some())
}

/// Permutations of four elements in lexicographic order of image arrays.
fn ordered_s4() -> Vec<Perm4> {
    let mut all: Vec<Perm4> = Perm4::all().collect();
    all.sort_by_key(|p| p.images());
    all
}

/// Decodes an isomorphism signature into a triangulation.
pub fn from_isosig(sig: &str) -> Result<Triangulation> {
    let bytes = sig.as_bytes();
    let err = |m: &str| Error::Parse {
        line: 1,
        message: format!("isomorphism signature `{sig}`: {m}"),
    };
    let mut pos = 0usize;
    let next = |pos: &mut usize| -> Result<usize> {
        let c = *bytes.get(*pos).ok_or_else(|| err("unexpected end"))?;
        *pos += 1;
        sig_value(c).ok_or_else(|| err("invalid character"))
    };
    let read_int = |pos: &mut usize, chars: usize| -> Result<usize> {
        let mut v = 0usize;
        for k in 0..chars {
            v |= next(pos)? << (6 * k);
        }
        Ok(v)
    };
    let perms = ordered_s4();
    let mut all_rows: Vec<[Option<Gluing>; 4]> = Vec::new();
    while pos < bytes.len() {
        let first = next(&mut pos)?;
        let (n, n_chars) = if first < 63 {
            (first, 1)
        } else {
            let nc = next(&mut pos)?;
            (read_int(&mut pos, nc)?, nc)
        };
        if n == 0 {
            continue;
        }
        let total = 4 * n;
        let mut actions = Vec::new();
        let mut facets = 0;
        let mut joins = 0;
        while facets < total {
            let v = next(&mut pos)?;
            for k in 0..3 {
                if facets >= total {
                    break;
                }
                let a = (v >> (2 * k)) & 3;
                match a {
                    0 => facets += 1,
                    1 => facets += 2,
                    2 => {
                        facets += 2;
                        joins += 1;
                    }
                    _ => return Err(err("invalid facet action")),
                }
                if facets > total {
                    return Err(err("facet actions overrun"));
                }
                actions.push(a);
            }
        }
        let mut dest = Vec::with_capacity(joins);
        for _ in 0..joins {
            dest.push(read_int(&mut pos, n_chars)?);
        }
        let mut glue = Vec::with_capacity(joins);
        for _ in 0..joins {
            let idx = read_int(&mut pos, 1)?;
            glue.push(*perms.get(idx).ok_or_else(|| err("bad permutation index"))?);
        }
        let mut rows: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; n];
        let mut next_unused = 1;
        let mut action_pos = 0;
        let mut join_pos = 0;
        for t in 0..n {
            for f in 0..4 {
                if rows[t][f].is_some() {
                    continue;
                }
                let a = *actions.get(action_pos).ok_or_else(|| err("too few facet actions"))?;
                action_pos += 1;
                match a {
                    0 => {}
                    1 => {
                        if next_unused >= n {
                            return Err(err("too many new simplices"));
                        }
                        rows[t][f] = Some(Gluing {
                            tet: next_unused,
                            perm: Perm4::IDENTITY,
                        });
                        rows[next_unused][f] = Some(Gluing {
                            tet: t,
                            perm: Perm4::IDENTITY,
                        });
                        next_unused += 1;
                    }
                    _ => {
                        let u = dest[join_pos];
                        let p = glue[join_pos];
                        join_pos += 1;
                        let uf = p.apply(f);
                        if u >= next_unused || rows[u][uf].is_some() || (u == t && uf == f) {
                            return Err(err("inconsistent join"));
                        }
                        rows[t][f] = Some(Gluing { tet: u, perm: p });
                        rows[u][uf] = Some(Gluing {
                            tet: t,
                            perm: p.inverse(),
                        });
                    }
                }
            }
        }
        let off = all_rows.len();
        for row in rows {
            let mut shifted = [None; 4];
            for f in 0..4 {
                shifted[f] = row[f].map(|g| Gluing {
                    tet: g.tet + off,
                    perm: g.perm,
                });
            }
            all_rows.push(shifted);
        }
    }
    Triangulation::new(all_rows).map_err(|e| err(&e.to_string()))
}

/// Parses either an inline gluing table or an isomorphism signature.
pub fn parse_triangulation_spec(text: &str, line_no: usize) -> Result<Triangulation> {
    let text = text.trim();
    if text.contains(':') || text.contains(';') || text.split_whitespace().count() > 1 || text == "-" {
        parse_inline_table(text, line_no)
    } else if looks_like_isosig(text) {
        from_isosig(text).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse { line: line_no, message },
            other => other,
        })
    } else {
        Err(Error::Parse {
            line: line_no,
            message: format!("unrecognised triangulation format `{text}`"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lone_tetrahedron_table() {
        let t = parse_gluing_table("# ball\n- - - -\n", 1).unwrap();
        assert_eq!(t.size(), 1);
        assert_eq!(to_gluing_table(&t), "- - - -\n");
    }

    #[test]
    fn malformed_permutation_names_line() {
        let err = parse_gluing_table("# c\n0:1:1x23 0:0:1023 - -\n", 1).unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("permutation"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn self_glued_face_is_a_parse_error() {
        let err = parse_gluing_table("0:0:0123 - - -\n", 1).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn figure_eight_signature() {
        let t = from_isosig("cPcbbbiht").unwrap();
        assert_eq!(t.size(), 2);
        assert_eq!(t.vertex_count(), 1);
        assert!(t.is_ideal());
        let again = parse_gluing_table(&to_gluing_table(&t), 1).unwrap();
        assert_eq!(again, t);
    }

    #[test]
    fn inline_tables() {
        let t = parse_triangulation_spec("- - - -", 3).unwrap();
        assert_eq!(t.size(), 1);
        assert!(parse_triangulation_spec("??", 3).is_err());
    }
}
