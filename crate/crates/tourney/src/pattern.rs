//! Turning command-line strings into tournaments: family tags with an
//! optional order, literal `n:bits` codes, and files of codes.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use tourney_core::{
    b6, circular, diamond, e_family, f_family, g_family, paley7, transitive, u_family, w_family,
    Tournament,
};

/// Builds the tournament a family tag names. Sized families (`t`, `u`, `w`,
/// `tr`, `e`, `f`, `g`) require `--order`; fixed ones (`p7`, `b6`, `c3`,
/// `d4`, `d4d`) accept it only when it matches their size.
pub fn family(tag: &str, order: Option<usize>) -> Result<Tournament> {
    let need = |order: Option<usize>| {
        order.ok_or_else(|| anyhow!("family `{tag}` requires --order"))
    };
    let fixed = |t: Tournament, size: usize| match order {
        Some(o) if o != size => bail!("family `{tag}` has fixed order {size}, not {o}"),
        _ => Ok(t),
    };
    match tag {
        "t" => Ok(circular(need(order)?)?),
        "u" => Ok(u_family(need(order)?)?),
        "w" => Ok(w_family(need(order)?)?),
        "tr" => Ok(transitive(need(order)?)?),
        "e" => Ok(e_family(need(order)?)?),
        "f" => Ok(f_family(need(order)?)?),
        "g" => Ok(g_family(need(order)?)?),
        "p7" => fixed(paley7(), 7),
        "b6" => fixed(b6(), 6),
        "c3" => fixed(circular(3).expect("size 3 is valid"), 3),
        "d4" => fixed(diamond(false), 4),
        "d4d" => fixed(diamond(true), 4),
        _ => bail!("unknown family `{tag}` (expected t|u|w|p7|b6|c3|d4|d4d|tr|e|f|g)"),
    }
}

/// Parses a pattern argument: either a literal `n:bits` code (`5:1100110111`)
/// or a family spec, `tag` alone or `tag:order` (`p7`, `w:7`).
pub fn parse_pattern(s: &str) -> Result<Tournament> {
    if s.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        return s.parse::<Tournament>().with_context(|| format!("bad tournament code `{s}`"));
    }
    match s.split_once(':') {
        Some((tag, order)) => {
            let order: usize =
                order.parse().map_err(|_| anyhow!("bad order in family spec `{s}`"))?;
            family(tag, Some(order))
        }
        None => family(s, None),
    }
}

/// Reads whitespace-separated tournament codes from a file, or from standard
/// input when `path` is `-`. Blank lines are skipped.
pub fn read_codes(path: &str) -> Result<Vec<Tournament>> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    text.split_whitespace()
        .map(|code| {
            code.parse::<Tournament>().with_context(|| format!("bad tournament code `{code}`"))
        })
        .collect()
}

/// A host argument: a literal code if it parses as one, otherwise a file of
/// codes (`-` for standard input).
pub fn read_hosts(s: &str) -> Result<Vec<Tournament>> {
    if s.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        if let Ok(t) = s.parse::<Tournament>() {
            return Ok(vec![t]);
        }
    }
    read_codes(s)
}

/// Parses the `--partition` argument: a comma-separated vertex list with an
/// optional `X=` prefix, for example `X=0,1,4` or `0,1,4`.
pub fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    let list = s.strip_prefix("X=").unwrap_or(s);
    list.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("bad vertex `{part}` in list `{s}`"))
        })
        .collect()
}
