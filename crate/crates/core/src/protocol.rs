//! Parser and renderer for the talk-phase utterance grammar.
//!
//! The grammar accepts exactly the canonical form produced by [`render`]:
//! upper-case keywords, single spaces, and two-digit zero-padded agent ids.
//! That makes `parse` and `render` exact inverses, which in turn makes the
//! character-length feature well defined.
//!
//! Grammar (EBNF):
//!
//! ```text
//! utterance := statement | "REQUEST" SP addressee SP "(" statement ")"
//! statement := "ESTIMATE"   SP agent SP role
//!            | "COMINGOUT"  SP agent SP role
//!            | "DIVINED"    SP agent SP species
//!            | "IDENTIFIED" SP agent SP species
//!            | "VOTE"       SP agent
//!            | "Skip" | "Over"
//! addressee := "ANY" | agent
//! agent     := "Agent[" digit digit "]"        (* "01".."99", never "00" *)
//! role      := "VILLAGER" | "WEREWOLF" | "SEER" | "MEDIUM"
//!            | "BODYGUARD" | "POSSESSED"
//! species   := "HUMAN" | "WEREWOLF"
//! SP        := " "                              (* exactly one space *)
//! ```
//!
//! Requests do not nest; the bracketed content is always a plain statement.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{AgentId, Role, Species};

/// A sentence that can stand alone or appear inside a `REQUEST`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statement {
    Estimate(AgentId, Role),
    Comingout(AgentId, Role),
    Divined(AgentId, Species),
    Identified(AgentId, Species),
    Vote(AgentId),
    Skip,
    Over,
}

/// Who a request is addressed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Addressee {
    Any,
    Agent(AgentId),
}

/// One talk-phase utterance. Requests wrap a single non-request statement,
/// so nesting deeper than one level is unrepresentable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Utterance {
    Plain(Statement),
    Request(Addressee, Statement),
}

impl Utterance {
    pub fn estimate(subject: AgentId, role: Role) -> Utterance {
        Utterance::Plain(Statement::Estimate(subject, role))
    }

    pub fn comingout(subject: AgentId, role: Role) -> Utterance {
        Utterance::Plain(Statement::Comingout(subject, role))
    }

    pub fn divined(subject: AgentId, species: Species) -> Utterance {
        Utterance::Plain(Statement::Divined(subject, species))
    }

    pub fn identified(subject: AgentId, species: Species) -> Utterance {
        Utterance::Plain(Statement::Identified(subject, species))
    }

    pub fn vote(target: AgentId) -> Utterance {
        Utterance::Plain(Statement::Vote(target))
    }

    pub fn skip() -> Utterance {
        Utterance::Plain(Statement::Skip)
    }

    pub fn over() -> Utterance {
        Utterance::Plain(Statement::Over)
    }

    pub fn request(addressee: Addressee, content: Statement) -> Utterance {
        Utterance::Request(addressee, content)
    }
}

impl fmt::Display for Utterance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

/// Canonical text for an utterance. `parse(render(u)) == u` always holds.
pub fn render(utterance: &Utterance) -> String {
    match utterance {
        Utterance::Plain(s) => render_statement(s),
        Utterance::Request(addressee, content) => {
            let addr = match addressee {
                Addressee::Any => "ANY".to_string(),
                Addressee::Agent(id) => id.to_string(),
            };
            format!("REQUEST {addr} ({})", render_statement(content))
        }
    }
}

fn render_statement(statement: &Statement) -> String {
    match statement {
        Statement::Estimate(id, role) => format!("ESTIMATE {id} {}", role.keyword()),
        Statement::Comingout(id, role) => format!("COMINGOUT {id} {}", role.keyword()),
        Statement::Divined(id, species) => format!("DIVINED {id} {}", species.keyword()),
        Statement::Identified(id, species) => format!("IDENTIFIED {id} {}", species.keyword()),
        Statement::Vote(id) => format!("VOTE {id}"),
        Statement::Skip => "Skip".to_string(),
        Statement::Over => "Over".to_string(),
    }
}

/// Parse failure with the byte offset of the failure point and the set of
/// token descriptions that would have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}",
            self.offset,
            self.expected.join(" | ")
        )
    }
}

/// Parse one canonical-form utterance. The whole input must be consumed.
pub fn parse(text: &str) -> Result<Utterance, ParseError> {
    let mut cursor = Cursor {
        input: text.as_bytes(),
        pos: 0,
    };
    let utterance = cursor.utterance()?;
    cursor.end_of_input()?;
    Ok(utterance)
}

const STATEMENT_KEYWORDS: [&str; 7] = [
    "ESTIMATE",
    "COMINGOUT",
    "DIVINED",
    "IDENTIFIED",
    "VOTE",
    "Skip",
    "Over",
];

struct Cursor<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn fail(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            offset: self.pos,
            expected,
        }
    }

    fn literal(&mut self, lit: &'static str) -> Result<(), ParseError> {
        if self.input[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(self.fail(vec![lit]))
        }
    }

    fn space(&mut self) -> Result<(), ParseError> {
        self.literal(" ").map_err(|_| self.fail(vec!["' '"]))
    }

    /// Matches the leading keyword of a statement or `REQUEST`. Keywords are
    /// only recognized when followed by a space, `(`, `)`, or end of input,
    /// so `VOTEX` is a single unknown token rather than `VOTE` + garbage.
    fn keyword(&mut self, choices: &[&'static str]) -> Option<&'static str> {
        for &kw in choices {
            let end = self.pos + kw.len();
            if self.input[self.pos..].starts_with(kw.as_bytes())
                && matches!(self.input.get(end), None | Some(b' ') | Some(b'(') | Some(b')'))
            {
                self.pos = end;
                return Some(kw);
            }
        }
        None
    }

    fn agent(&mut self) -> Result<AgentId, ParseError> {
        let err = || self.fail(vec!["Agent[NN]"]);
        if !self.input[self.pos..].starts_with(b"Agent[") {
            return Err(err());
        }
        let digits = &self.input[self.pos + 6..];
        match digits {
            [d1 @ b'0'..=b'9', d2 @ b'0'..=b'9', b']', ..] => {
                let id = (d1 - b'0') * 10 + (d2 - b'0');
                if id == 0 {
                    return Err(err());
                }
                self.pos += 9;
                Ok(AgentId::new(id))
            }
            _ => Err(err()),
        }
    }

    fn role(&mut self) -> Result<Role, ParseError> {
        // BODYGUARD before shorter names is irrelevant here because no role
        // keyword is a prefix of another, but WEREWOLF must be tried for both
        // role and species positions.
        for role in Role::ALL {
            if self.keyword(&[role.keyword()]).is_some() {
                return Ok(role);
            }
        }
        Err(self.fail(vec![
            "VILLAGER",
            "WEREWOLF",
            "SEER",
            "MEDIUM",
            "BODYGUARD",
            "POSSESSED",
        ]))
    }

    fn species(&mut self) -> Result<Species, ParseError> {
        if self.keyword(&["HUMAN"]).is_some() {
            Ok(Species::Human)
        } else if self.keyword(&["WEREWOLF"]).is_some() {
            Ok(Species::Werewolf)
        } else {
            Err(self.fail(vec!["HUMAN", "WEREWOLF"]))
        }
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let Some(kw) = self.keyword(&STATEMENT_KEYWORDS) else {
            return Err(self.fail(STATEMENT_KEYWORDS.to_vec()));
        };
        match kw {
            "Skip" => Ok(Statement::Skip),
            "Over" => Ok(Statement::Over),
            "VOTE" => {
                self.space()?;
                Ok(Statement::Vote(self.agent()?))
            }
            "ESTIMATE" | "COMINGOUT" => {
                self.space()?;
                let subject = self.agent()?;
                self.space()?;
                let role = self.role()?;
                Ok(match kw {
                    "ESTIMATE" => Statement::Estimate(subject, role),
                    _ => Statement::Comingout(subject, role),
                })
            }
            "DIVINED" | "IDENTIFIED" => {
                self.space()?;
                let subject = self.agent()?;
                self.space()?;
                let species = self.species()?;
                Ok(match kw {
                    "DIVINED" => Statement::Divined(subject, species),
                    _ => Statement::Identified(subject, species),
                })
            }
            _ => unreachable!(),
        }
    }

    fn utterance(&mut self) -> Result<Utterance, ParseError> {
        if self.keyword(&["REQUEST"]).is_some() {
            self.space()?;
            let addressee = if self.keyword(&["ANY"]).is_some() {
                Addressee::Any
            } else {
                Addressee::Agent(self.agent().map_err(|mut e| {
                    e.expected.insert(0, "ANY");
                    e
                })?)
            };
            self.space()?;
            self.literal("(")?;
            let content = self.statement()?;
            self.literal(")")?;
            Ok(Utterance::Request(addressee, content))
        } else {
            let start = self.pos;
            self.statement().map(Utterance::Plain).map_err(|e| {
                if e.offset == start {
                    // Dispatch failure: report every keyword an utterance
                    // may begin with, REQUEST included.
                    let mut expected = vec!["REQUEST"];
                    expected.extend_from_slice(&STATEMENT_KEYWORDS);
                    ParseError {
                        offset: start,
                        expected,
                    }
                } else {
                    e
                }
            })
        }
    }

    fn end_of_input(&self) -> Result<(), ParseError> {
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.fail(vec!["end of input"]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(n: u8) -> AgentId {
        AgentId::new(n)
    }

    #[test]
    fn parses_core_sentences() {
        assert_eq!(
            parse("ESTIMATE Agent[01] WEREWOLF").unwrap(),
            Utterance::estimate(id(1), Role::Werewolf)
        );
        assert_eq!(
            parse("ESTIMATE Agent[01] VILLAGER").unwrap(),
            Utterance::estimate(id(1), Role::Villager)
        );
        assert_eq!(
            parse("REQUEST ANY (VOTE Agent[02])").unwrap(),
            Utterance::request(Addressee::Any, Statement::Vote(id(2)))
        );
        assert_eq!(
            parse("REQUEST Agent[03] (COMINGOUT Agent[03] SEER)").unwrap(),
            Utterance::request(Addressee::Agent(id(3)), Statement::Comingout(id(3), Role::Seer))
        );
        assert_eq!(parse("Skip").unwrap(), Utterance::skip());
        assert_eq!(parse("Over").unwrap(), Utterance::over());
        assert_eq!(
            parse("DIVINED Agent[05] HUMAN").unwrap(),
            Utterance::divined(id(5), Species::Human)
        );
        assert_eq!(
            parse("IDENTIFIED Agent[04] WEREWOLF").unwrap(),
            Utterance::identified(id(4), Species::Werewolf)
        );
    }

    #[test]
    fn id_range_is_not_the_parsers_concern() {
        // Grammatical ids outside a table's player count still parse.
        assert_eq!(parse("VOTE Agent[99]").unwrap(), Utterance::vote(id(99)));
    }

    #[test]
    fn renders_canonical_form() {
        assert_eq!(
            render(&Utterance::estimate(id(1), Role::Villager)),
            "ESTIMATE Agent[01] VILLAGER"
        );
        assert_eq!(render(&Utterance::skip()), "Skip");
        assert_eq!(
            render(&Utterance::request(Addressee::Any, Statement::Vote(id(7)))),
            "REQUEST ANY (VOTE Agent[07])"
        );
    }

    #[test]
    fn rejects_non_canonical_input() {
        // (input, failure offset)
        let cases: &[(&str, usize)] = &[
            ("", 0),
            ("Skip ", 4),                          // trailing space
            ("skip", 0),                           // keyword case matters
            ("VOTE  Agent[02]", 5),                // double space
            ("VOTE Agent[2]", 5),                  // id must be two digits
            ("VOTE Agent[00]", 5),                 // ids are 1-based
            ("ESTIMATE Agent[01] HUMAN", 19),      // species where role expected
            ("DIVINED Agent[01] VILLAGER", 18),    // role where species expected
            ("REQUEST ANY (REQUEST ANY (Skip))", 13), // requests do not nest
            ("REQUEST ANY Skip", 12),              // missing parentheses
            ("VOTE Agent[01] extra", 14),          // trailing garbage
            ("VOTEX", 0),                          // unknown keyword
        ];
        for &(input, offset) in cases {
            let err = parse(input).expect_err(input);
            assert_eq!(err.offset, offset, "offset for {input:?}: {err}");
            assert!(!err.expected.is_empty());
        }
    }

    #[test]
    fn accepted_inputs_are_exactly_canonical() {
        // If a string parses, it must already be the canonical rendering.
        for input in [
            "ESTIMATE Agent[01] WEREWOLF",
            "REQUEST Agent[11] (DIVINED Agent[02] HUMAN)",
            "COMINGOUT Agent[15] BODYGUARD",
        ] {
            let ast = parse(input).unwrap();
            assert_eq!(render(&ast), input);
        }
    }
}
