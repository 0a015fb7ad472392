//! Explicit surfaces and systems: X(g) on the (4g+2)-gon and the genus-3
//! 20-gon carrying two transverse curves that meet five times.

use crate::complex::{cyclic_equivalent, invert_word, EdgeToken, Face, PolygonComplex};
use crate::curve::{ChordCurve, Passage};
use crate::error::{Error, Result};
use crate::format::parse_surface;
use crate::systems::{filling_pair_check, CurveSystem};
use crate::Param;

/// `n`-th edge label: `a`, `b`, ..., `z`, `a1`, `b1`, ...
pub fn label_name(n: usize) -> String {
    let letter = (b'a' + (n % 26) as u8) as char;
    if n < 26 {
        letter.to_string()
    } else {
        format!("{letter}{}", n / 26)
    }
}

/// The (4g+2)-gon with opposite sides glued, and its 2g+1 diagonal curves.
pub fn build_xg(g: usize) -> Result<CurveSystem> {
    if g == 0 {
        return Err(Error::InvalidCurve("genus must be at least 1".into()));
    }
    let n = 2 * g + 1;
    let mut tokens: Vec<EdgeToken> = (0..n)
        .map(|k| EdgeToken::new(label_name(k), false))
        .collect();
    tokens.extend((0..n).map(|k| EdgeToken::new(label_name(k), true)));
    let c = PolygonComplex::new(
        format!("x{g}"),
        vec![Face {
            name: "P".into(),
            tokens,
        }],
    )?;
    let named = (0..n)
        .map(|k| {
            let p = Passage::new(k, Param::new(k as i64 + 1, n as i64 + 2));
            (format!("x{}", k + 1), ChordCurve::new(vec![p]))
        })
        .collect();
    CurveSystem::new(c, named)
}

pub const GENUS3_ALPHA: [&str; 5] = ["a", "b", "c", "d", "e"];
pub const GENUS3_BETA: [&str; 5] = ["f", "g", "h", "i", "j"];
pub const GENUS3_TREE: [&str; 4] = ["b", "c", "d", "e"];
pub const GENUS3_RELATOR: &str = "a h' j' f' g' i' a' f i h g j";

/// The 20-gon word found by [`genus3_20gon_solutions`], pinned.
pub const GENUS3_WORD: &str = "a h' e j' c' f' e' g' c i' a' f b' i d h b g d' j";

fn word(text: &str) -> Vec<EdgeToken> {
    text.split_whitespace()
        .map(|w| match w.strip_suffix('\'') {
            Some(l) => EdgeToken::new(l, true),
            None => EdgeToken::new(w, false),
        })
        .collect()
}

fn twenty_gon(tokens: Vec<EdgeToken>) -> Result<PolygonComplex> {
    PolygonComplex::new(
        "s20",
        vec![Face {
            name: "P".into(),
            tokens,
        }],
    )
}

/// Whether a complex meets every constraint placed on the genus-3 20-gon.
pub fn check_genus3_20gon(c: &PolygonComplex) -> Result<bool> {
    if c.face_count() != 1 || c.face_len(0) != 20 || !c.is_orientable() {
        return Ok(false);
    }
    if c.vertex_count() != 5 || c.genus() != Some(3) {
        return Ok(false);
    }
    // letters alternate between the two curves
    let alpha_at = |pos: usize| GENUS3_ALPHA.contains(&c.token(c.side_at(0, pos)).label.as_str());
    if (0..20).any(|p| alpha_at(p) == alpha_at(p + 1)) {
        return Ok(false);
    }
    match filling_pair_check(c, &GENUS3_ALPHA, &GENUS3_BETA) {
        Ok(f) if f.i == 5 && f.d == 1 && f.identity && f.bound => {}
        Ok(_) | Err(Error::NotTwoCurves(_)) | Err(Error::NotTransverse(_)) => return Ok(false),
        Err(e) => return Err(e),
    }
    let p = c.contract_tree_presentation(&GENUS3_TREE)?;
    let target = word(GENUS3_RELATOR);
    Ok(cyclic_equivalent(&p.relator, &target)
        || cyclic_equivalent(&p.relator, &invert_word(&target)))
}

/// Every filling of the relator template by the tree letters that passes
/// [`check_genus3_20gon`], in lexicographic order of the filling.
///
/// The relator fixes the β letters and both occurrences of `a`; the tree
/// letters `b..e` fill the eight remaining slots, one in each gap between
/// adjacent β letters.
pub fn genus3_20gon_solutions() -> Result<Vec<PolygonComplex>> {
    let rel = word(GENUS3_RELATOR);
    let mut pool: Vec<EdgeToken> = Vec::new();
    for l in &GENUS3_TREE {
        pool.push(EdgeToken::new(*l, false));
        pool.push(EdgeToken::new(*l, true));
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..pool.len()).collect();
    loop {
        let mut tokens = Vec::with_capacity(20);
        let mut slot = 0;
        for (i, t) in rel.iter().enumerate() {
            tokens.push(t.clone());
            let next = &rel[(i + 1) % rel.len()];
            let beta = |x: &EdgeToken| GENUS3_BETA.contains(&x.label.as_str());
            if beta(t) && beta(next) {
                tokens.push(pool[perm[slot]].clone());
                slot += 1;
            }
        }
        let c = twenty_gon(tokens)?;
        if check_genus3_20gon(&c)? {
            out.push(c);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The pinned genus-3 20-gon, revalidated on every call.
pub fn build_genus3_20gon() -> Result<PolygonComplex> {
    let c = parse_surface(&format!("surface s20\nface P: {GENUS3_WORD}\n"))?;
    if !check_genus3_20gon(&c)? {
        return Err(Error::InfeasibleConstraints);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::print_surface;
    use crate::systems::intersection_matrix;

    #[test]
    fn xg_small_genera() {
        for g in 1..=3 {
            let s = build_xg(g).unwrap();
            assert_eq!(s.complex.genus(), Some(g));
            let r = intersection_matrix(&s).unwrap();
            assert!(r.complete1 && r.maximal, "g={g}");
        }
    }

    #[test]
    fn pinned_word_is_the_first_solution() {
        let sols = genus3_20gon_solutions().unwrap();
        assert!(!sols.is_empty());
        let pinned = build_genus3_20gon().unwrap();
        assert_eq!(sols[0].faces(), pinned.faces());
        let text = print_surface(&pinned);
        assert_eq!(parse_surface(&text).unwrap(), pinned);
    }
}
