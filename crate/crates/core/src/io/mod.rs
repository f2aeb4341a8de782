//! Text file formats: the boundary-loop document (input) and OBJ / ASCII PLY
//! meshes (output). See `docs/formats.md` for the exact layouts.

mod loop_doc;
mod obj;
mod ply;

pub use loop_doc::{read_loop, write_loop, LoopDocument, SideDocument, SCHEMA_VERSION};
pub use obj::{read_obj, write_obj, ObjData};
pub use ply::{read_ply_scalar, write_ply_scalar};

/// Formats `x` with 9 significant digits, in the style of C's `%.9g`.
pub fn format_sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..9).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (8 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub(crate) fn number_error(line: usize, what: &str, token: &str) -> crate::Error {
    crate::Error::Parse {
        line,
        column: 1,
        message: format!("invalid {what} '{token}'"),
    }
}
