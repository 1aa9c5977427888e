//! Curve files.
//!
//! ```text
//! # comments run to the end of the line
//! degree 2
//! [1,0,0]
//! [0,1,0]
//! [0,0,1]
//! ```
//!
//! or a `matrix` header followed by six bracketed forms, the rows
//! `(a0, a1, a2)` and `(b0, b1, b2)` whose 2x2 minors give the curve.

use syzlift::arith::{BinaryForm, MovingLine};
use syzlift::curve::ParamCurve;
use syzlift::{Error, Result};

pub fn parse_curve(text: &str) -> Result<ParamCurve> {
    let body: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
    let body = body.trim_start();
    let header_end = body.find(['\n', '[']).unwrap_or(body.len());
    let header: Vec<&str> = body[..header_end].split_whitespace().collect();
    let forms = bracketed(&body[header_end..])?;
    match header.as_slice() {
        ["degree", d] => {
            let d: usize = d.parse().map_err(|_| Error::Parse(format!("invalid degree '{d}'")))?;
            let [a, b, c]: [BinaryForm; 3] = forms
                .try_into()
                .map_err(|v: Vec<BinaryForm>| Error::Parse(format!("expected 3 coefficient lists, found {}", v.len())))?;
            for f in [&a, &b, &c] {
                if f.degree() != d {
                    return Err(Error::Parse(format!(
                        "coefficient list {} has {} entries, expected {}",
                        f.to_bracket_string(),
                        f.degree() + 1,
                        d + 1
                    )));
                }
            }
            ParamCurve::new([a, b, c])
        }
        ["matrix"] => {
            if forms.len() != 6 {
                return Err(Error::Parse(format!("expected 6 coefficient lists after 'matrix', found {}", forms.len())));
            }
            let mut it = forms.into_iter();
            let mut row = || -> Result<MovingLine> {
                let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
                if a.degree() != b.degree() || b.degree() != c.degree() {
                    return Err(Error::Parse("matrix row entries must share a degree".into()));
                }
                MovingLine::new(a, b, c).map_err(|_| Error::Parse("matrix row is zero".into()))
            };
            let (top, bottom) = (row()?, row()?);
            ParamCurve::new(top.cross(&bottom))
        }
        _ => Err(Error::Parse(format!(
            "expected a 'degree d' or 'matrix' header, found '{}'",
            header.join(" ")
        ))),
    }
}

fn bracketed(text: &str) -> Result<Vec<BinaryForm>> {
    let mut out = Vec::new();
    let mut rest = text;
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            return Ok(out);
        }
        if !rest.starts_with('[') {
            let junk: String = rest.chars().take(20).collect();
            return Err(Error::Parse(format!("unexpected text '{junk}'")));
        }
        let end = rest.find(']').ok_or_else(|| Error::Parse("unclosed '['".into()))?;
        let list: String = rest[..=end].chars().filter(|c| !c.is_whitespace()).collect();
        out.push(BinaryForm::parse(&list)?);
        rest = &rest[end + 1..];
    }
}
