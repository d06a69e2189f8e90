export type Outcome = "N" | "P";

/** [row, column], 0-based from the top-left. */
export type Cell = readonly [number, number];

export interface PositionDoc {
  ruleset: string;
  version: number;
  rows: string[];
}

export interface SessionSummary {
  id: string;
  ruleset: string;
  position: PositionDoc;
  feasible_moves: number[];
  game_over: boolean;
  winner_to_move_lost: boolean;
}

export interface HistoryEntry {
  move: number;
  position: PositionDoc;
}

export interface SessionDetail extends SessionSummary {
  initial_position: PositionDoc;
  history: HistoryEntry[];
  created_at: number;
}

export interface MoveResult {
  position: PositionDoc;
  feasible_moves: number[];
  game_over: boolean;
  winner_to_move_lost: boolean;
  engine_move: number | null;
}

export interface OptionAnalysis {
  move: number;
  grundy?: string;
  outcome?: Outcome;
  budget_exceeded?: boolean;
}

export interface Analysis {
  partial: boolean;
  options: OptionAnalysis[];
  grundy?: string;
  outcome?: Outcome;
  best_move?: number | null;
}

export type EngineReply = "optimal" | "random" | "none";

export type OpponentMode = "hotseat" | "engine-optimal" | "engine-random";

export interface ConvertResult {
  document: Record<string, unknown> & { ruleset: string };
  move_bijection: Record<string, unknown> | null;
}
