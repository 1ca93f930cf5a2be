//! Roles, teams, species, and agent identifiers.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The two factions. Victory is decided per team, not per player.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Team {
    #[serde(rename = "VILLAGERS")]
    Villagers,
    #[serde(rename = "WEREWOLVES")]
    Werewolves,
}

/// What a divination or medium report reveals. The possessed is on the
/// werewolf team but has human species, so inspections cannot expose it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Species {
    #[serde(rename = "HUMAN")]
    Human,
    #[serde(rename = "WEREWOLF")]
    Werewolf,
}

impl Species {
    pub fn flipped(self) -> Species {
        match self {
            Species::Human => Species::Werewolf,
            Species::Werewolf => Species::Human,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    #[serde(rename = "VILLAGER")]
    Villager,
    #[serde(rename = "WEREWOLF")]
    Werewolf,
    #[serde(rename = "SEER")]
    Seer,
    #[serde(rename = "MEDIUM")]
    Medium,
    #[serde(rename = "BODYGUARD")]
    Bodyguard,
    #[serde(rename = "POSSESSED")]
    Possessed,
}

impl Role {
    pub const ALL: [Role; 6] = [
        Role::Villager,
        Role::Werewolf,
        Role::Seer,
        Role::Medium,
        Role::Bodyguard,
        Role::Possessed,
    ];

    pub fn team(self) -> Team {
        match self {
            Role::Werewolf | Role::Possessed => Team::Werewolves,
            _ => Team::Villagers,
        }
    }

    /// Species as seen by the seer and the medium.
    pub fn species(self) -> Species {
        match self {
            Role::Werewolf => Species::Werewolf,
            _ => Species::Human,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Role::Villager => "VILLAGER",
            Role::Werewolf => "WEREWOLF",
            Role::Seer => "SEER",
            Role::Medium => "MEDIUM",
            Role::Bodyguard => "BODYGUARD",
            Role::Possessed => "POSSESSED",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl Species {
    pub fn keyword(self) -> &'static str {
        match self {
            Species::Human => "HUMAN",
            Species::Werewolf => "WEREWOLF",
        }
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl fmt::Display for Team {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Team::Villagers => write!(f, "VILLAGERS"),
            Team::Werewolves => write!(f, "WEREWOLVES"),
        }
    }
}

/// 1-based player index, stable for the whole game.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(try_from = "u8", into = "u8")]
pub struct AgentId(u8);

impl AgentId {
    /// Panics on zero; ids are 1-based.
    pub fn new(index: u8) -> AgentId {
        assert!(index >= 1, "agent ids are 1-based");
        AgentId(index)
    }

    pub fn index(self) -> u8 {
        self.0
    }
}

impl TryFrom<u8> for AgentId {
    type Error = String;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        if value == 0 {
            Err("agent ids are 1-based".to_string())
        } else {
            Ok(AgentId(value))
        }
    }
}

impl From<AgentId> for u8 {
    fn from(id: AgentId) -> u8 {
        id.0
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Agent[{:02}]", self.0)
    }
}
