//! Text names for game values.
//!
//! Grammar (whitespace insignificant):
//!   VALUE  := NUMBER | NIMBER | NUMSTAR | BRACE
//!   NUMBER := ['-'] digits ['/' pow2]      e.g. 3, -5/4
//!   NIMBER := '*' [nat ≥ 2]                e.g. *, *3
//!   NUMSTAR:= NUMBER '*'                   e.g. 2*, -1*  (the number plus *)
//!   BRACE  := '{' list '|' list '}'        either side possibly empty
//!
//! `format_value` emits the shortest recognized name; `parse_value` inverts
//! it (round-trip identity on canonical forms) and canonicalizes brace input.

use super::{DyadicRational, GameId, GameStore, ValueError};

impl GameStore {
    pub fn format_value(&self, g: GameId) -> String {
        if let Some((x, k)) = self.nus_parts(g) {
            match k {
                0 => return x.to_string(),
                1 if x.is_zero() => return "*".to_string(),
                1 => return format!("{x}*"),
                _ if x.is_zero() => return format!("*{k}"),
                _ => {} // x + *k with k ≥ 2 has no short name; fall through
            }
        }
        let mut out = String::from("{");
        for (i, &o) in self.left_options(g).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&self.format_value(o));
        }
        out.push('|');
        for (i, &o) in self.right_options(g).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&self.format_value(o));
        }
        out.push('}');
        out
    }

    pub fn parse_value(&mut self, text: &str) -> Result<GameId, ValueError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let id = p.value(self)?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(id)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn err(&self, message: impl Into<String>) -> ValueError {
        ValueError::Parse {
            at: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ValueError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", byte as char)))
        }
    }

    fn value(&mut self, store: &mut GameStore) -> Result<GameId, ValueError> {
        self.skip_ws();
        match self.peek() {
            Some(b'{') => self.brace(store),
            Some(b'*') => {
                self.pos += 1;
                match self.peek() {
                    Some(b'0'..=b'9') => {
                        let at = self.pos;
                        let k = self.digits()?;
                        if k < 2 {
                            return Err(ValueError::Parse {
                                at,
                                message: "a nimber suffix must be at least 2 (plain '*' is *1)"
                                    .into(),
                            });
                        }
                        let k = u32::try_from(k).map_err(|_| ValueError::Parse {
                            at,
                            message: "nimber suffix out of range".into(),
                        })?;
                        store.make_nus(DyadicRational::zero(), k)
                    }
                    _ => store.make_nus(DyadicRational::zero(), 1),
                }
            }
            Some(b'-' | b'0'..=b'9') => {
                let d = self.number()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    store.make_nus(d, 1)
                } else {
                    store.number(d)
                }
            }
            _ => Err(self.err("expected a value")),
        }
    }

    fn brace(&mut self, store: &mut GameStore) -> Result<GameId, ValueError> {
        self.expect(b'{')?;
        let left = self.value_list(store, b'|')?;
        self.expect(b'|')?;
        let right = self.value_list(store, b'}')?;
        self.expect(b'}')?;
        store.make_game(&left, &right)
    }

    fn value_list(
        &mut self,
        store: &mut GameStore,
        terminator: u8,
    ) -> Result<Vec<GameId>, ValueError> {
        self.skip_ws();
        if self.peek() == Some(terminator) {
            return Ok(Vec::new());
        }
        let mut out = vec![self.value(store)?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b',') {
                self.pos += 1;
                out.push(self.value(store)?);
            } else {
                return Ok(out);
            }
        }
    }

    fn number(&mut self) -> Result<DyadicRational, ValueError> {
        self.skip_ws();
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        };
        let magnitude = self.digits()?;
        let numerator = if negative {
            -(magnitude as i64)
        } else {
            magnitude as i64
        };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den < 2 || !den.is_power_of_two() {
                return Err(ValueError::Parse {
                    at,
                    message: "denominator must be a power of two, at least 2".into(),
                });
            }
            DyadicRational::new(numerator, den.trailing_zeros())
        } else {
            Ok(DyadicRational::integer(numerator))
        }
    }

    fn digits(&mut self) -> Result<u64, ValueError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or_else(|| ValueError::Parse {
                    at: start,
                    message: "number literal too large".into(),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        if value > i64::MAX as u64 {
            return Err(ValueError::Parse {
                at: start,
                message: "number literal too large".into(),
            });
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Nimber;

    fn store() -> GameStore {
        GameStore::new()
    }

    #[test]
    fn formats_short_names() {
        let mut s = store();
        assert_eq!(s.format_value(s.zero()), "0");
        let star = s.star();
        assert_eq!(s.format_value(star), "*");
        let s3 = s.nimber_value(Nimber(3)).unwrap();
        assert_eq!(s.format_value(s3), "*3");
        let m1 = s.number(DyadicRational::integer(-1)).unwrap();
        let m1s = s.add(m1, star).unwrap();
        assert_eq!(s.format_value(m1s), "-1*");
        let q = s.number(DyadicRational::new(-5, 2).unwrap()).unwrap();
        assert_eq!(s.format_value(q), "-5/4");
    }

    #[test]
    fn formats_braces_when_no_short_name() {
        let mut s = store();
        let one = s.number(DyadicRational::integer(1)).unwrap();
        let m1 = s.number(DyadicRational::integer(-1)).unwrap();
        let switch = s.make_game(&[one], &[m1]).unwrap();
        assert_eq!(s.format_value(switch), "{1|-1}");
        let z = s.zero();
        let star = s.star();
        let up = s.make_game(&[z], &[star]).unwrap();
        assert_eq!(s.format_value(up), "{0|*}");
        // 1 + *2 has no short spelling either.
        let v = s.make_nus(DyadicRational::integer(1), 2).unwrap();
        assert_eq!(s.format_value(v), "{1,1*|1,1*}");
    }

    #[test]
    fn parses_each_form() {
        let mut s = store();
        let star = s.star();
        assert_eq!(s.parse_value("*").unwrap(), star);
        let s3 = s.nimber_value(Nimber(3)).unwrap();
        assert_eq!(s.parse_value("*3").unwrap(), s3);
        let half = s.number(DyadicRational::new(1, 1).unwrap()).unwrap();
        assert_eq!(s.parse_value("1/2").unwrap(), half);
        assert_eq!(s.parse_value("2/4").unwrap(), half);
        let m1 = s.number(DyadicRational::integer(-1)).unwrap();
        let m1s = s.add(m1, star).unwrap();
        assert_eq!(s.parse_value("-1*").unwrap(), m1s);
        assert_eq!(s.parse_value("{|}").unwrap(), s.zero());
        // Brace input canonicalizes.
        assert_eq!(s.parse_value("{0|0}").unwrap(), star);
        let s2 = s.nimber_value(Nimber(2)).unwrap();
        assert_eq!(s.parse_value("{0,*|0,*}").unwrap(), s2);
        assert_eq!(s.parse_value(" { 0 | * } ").unwrap(), {
            let z = s.zero();
            s.make_game(&[z], &[star]).unwrap()
        });
    }

    #[test]
    fn round_trips_canonical_forms() {
        let mut s = store();
        let mut ids = Vec::new();
        for text in ["0", "3", "-5/4", "*", "*3", "2*", "-1*", "1/2*", "{1|-1}", "{0|*}"] {
            ids.push((text, s.parse_value(text).unwrap()));
        }
        for (text, id) in ids {
            let printed = s.format_value(id);
            assert_eq!(printed, text);
            assert_eq!(s.parse_value(&printed).unwrap(), id);
        }
    }

    #[test]
    fn rejects_malformed_text() {
        let mut s = store();
        for bad in [
            "", "*1", "*0", "3/3", "3/0", "3/1", "{0|", "{0}", "1oops", "{0|0}}", "--1", "/2",
            "1/2/2", "±1",
        ] {
            let r = s.parse_value(bad);
            assert!(
                matches!(r, Err(ValueError::Parse { .. })),
                "{bad:?} gave {r:?}"
            );
        }
    }

    #[test]
    fn parse_error_reports_position() {
        let mut s = store();
        match s.parse_value("{0|oops}") {
            Err(ValueError::Parse { at, .. }) => assert_eq!(at, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
