//! Text forms `(x1,x2,...)` and `(s1,s2,...)`. Whitespace is ignored;
//! errors carry the character position in the original input.

use super::StackEntry;
use crate::error::{Error, Result};

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Split `( item , item , ... )` into items with their start positions.
fn items(text: &str) -> Result<Vec<(usize, String)>> {
    let chars: Vec<(usize, char)> = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
    let Some(&(open_pos, open)) = chars.first() else {
        return Err(err(0, "empty input"));
    };
    if open != '(' {
        return Err(err(open_pos, format!("expected '(', found {open:?}")));
    }
    let &(close_pos, close) = chars.last().expect("nonempty");
    if chars.len() < 2 || close != ')' {
        return Err(err(close_pos + 1, "expected ')' at end of input"));
    }
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = chars.get(1).map_or(close_pos, |c| c.0);
    for &(pos, c) in &chars[1..chars.len() - 1] {
        match c {
            ',' => {
                if cur.is_empty() {
                    return Err(err(pos, "empty stack entry before ','"));
                }
                out.push((start, std::mem::take(&mut cur)));
                start = pos + 1;
            }
            '(' | ')' => return Err(err(pos, format!("unexpected {c:?}"))),
            _ => {
                if cur.is_empty() {
                    start = pos;
                }
                cur.push(c);
            }
        }
    }
    if cur.is_empty() && !out.is_empty() {
        return Err(err(close_pos, "empty stack entry before ')'"));
    }
    out.push((start, cur));
    Ok(out)
}

pub(super) fn parse_code(text: &str) -> Result<Vec<u32>> {
    let items = items(text)?;
    items
        .into_iter()
        .map(|(pos, s)| {
            if s.is_empty() {
                return Err(err(pos, "expected a stack size"));
            }
            if let Some((off, c)) = s.chars().enumerate().find(|(_, c)| !c.is_ascii_digit()) {
                return Err(err(pos + off, format!("expected a digit, found {c:?}")));
            }
            s.parse::<u32>().map_err(|_| err(pos, "stack size out of range"))
        })
        .collect()
}

pub(super) fn parse_state(text: &str) -> Result<Vec<Vec<StackEntry>>> {
    let items = items(text)?;
    if items.len() == 1 && items[0].1.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    items
        .into_iter()
        .map(|(pos, s)| {
            s.chars()
                .enumerate()
                .map(|(off, c)| match c {
                    '+' => Ok(StackEntry::Plus),
                    '-' => Ok(StackEntry::Minus),
                    '?' => Ok(StackEntry::Unresolved),
                    c => Err(err(pos + off, format!("expected '+', '-' or '?', found {c:?}"))),
                })
                .collect()
        })
        .collect()
}
