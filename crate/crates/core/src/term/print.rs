use super::Term;

pub(super) fn print(t: &Term) -> String {
    let mut out = String::new();
    write_term(t, &mut out);
    out
}

fn write_term(t: &Term, out: &mut String) {
    match t {
        Term::Var(i) => {
            out.push('x');
            out.push_str(&i.to_string());
        }
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        _ => {
            let (op, l, r) = t.as_binary().unwrap();
            out.push('(');
            write_term(l, out);
            out.push(' ');
            out.push_str(op.symbol());
            out.push(' ');
            write_term(r, out);
            out.push(')');
        }
    }
}
