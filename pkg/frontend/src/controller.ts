import { ApiError, ServiceClient } from "./api";
import { transitionCells, type BoardView } from "./board";
import type { Cell, EngineReply, HistoryEntry, OpponentMode } from "./types";

export interface ControllerOptions {
  /** Milliseconds the transition overlay stays up; 0 in scripted sessions. */
  animationMs?: number;
  mode?: OpponentMode;
  seed?: number;
  onChange?: (view: BoardView, controller: GameController) => void;
  onError?: (message: string) => void;
}

const ENGINE_REPLY: Record<OpponentMode, EngineReply> = {
  hotseat: "none",
  "engine-optimal": "optimal",
  "engine-random": "random",
};

function delay(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

/** Client-side play session: owns the board view, keeps at most one move
 * request in flight, and never issues a move the service would reject
 * (clickability comes from the service's feasible list). */
export class GameController {
  readonly client: ServiceClient;
  sessionId: string | null = null;
  mode: OpponentMode;
  seed: number;
  animationMs: number;

  /** Positions by ply: index 0 is the initial grid. */
  positions: string[][] = [];
  moves: (number | null)[] = [null];
  feasible: number[] = [];
  gameOver = false;
  cursor = 0;
  busy = false;
  rejectedMoves = 0;
  lastTransition: Cell[] = [];

  private onChange?: ControllerOptions["onChange"];
  private onError?: ControllerOptions["onError"];

  constructor(client: ServiceClient, options: ControllerOptions = {}) {
    this.client = client;
    this.mode = options.mode ?? "hotseat";
    this.seed = options.seed ?? 0;
    this.animationMs = options.animationMs ?? 250;
    this.onChange = options.onChange;
    this.onError = options.onError;
  }

  get view(): BoardView {
    return {
      grid: this.positions[this.cursor] ?? [],
      pendingMove: this.pendingMove,
      transitionCells: this.pendingTransition,
      historyCursor: this.cursor,
    };
  }

  private pendingMove: number | null = null;
  private pendingTransition: Cell[] = [];

  get atTip(): boolean {
    return this.cursor === this.positions.length - 1;
  }

  /** The side to move has no feasible move and loses under normal play. */
  get loserToMove(): boolean {
    return this.gameOver;
  }

  private emit(): void {
    this.onChange?.(this.view, this);
  }

  async start(position: unknown, mode?: OpponentMode, seed?: number): Promise<void> {
    if (mode) this.mode = mode;
    if (seed !== undefined) this.seed = seed;
    const session = await this.client.createSession(position);
    this.sessionId = session.id;
    this.positions = [session.position.rows];
    this.moves = [null];
    this.feasible = session.feasible_moves;
    this.gameOver = session.game_over;
    this.cursor = 0;
    this.pendingMove = null;
    this.pendingTransition = [];
    this.lastTransition = [];
    this.rejectedMoves = 0;
    this.emit();
  }

  /** Three-phase move: select, show the cells about to flip, then commit the
   * service's successor.  Clicks on infeasible columns or while a request is
   * in flight are inert. */
  async clickColumn(col: number): Promise<boolean> {
    if (this.busy || this.gameOver || !this.atTip || !this.sessionId) {
      return false;
    }
    if (!this.feasible.includes(col)) {
      return false;
    }
    this.busy = true;
    try {
      const grid = this.positions[this.cursor];
      this.pendingMove = col;
      this.emit();
      this.pendingTransition = transitionCells(grid, col);
      this.lastTransition = this.pendingTransition;
      this.emit();
      if (this.animationMs > 0) {
        await delay(this.animationMs);
      }
      const result = await this.client.postMove(
        this.sessionId,
        col,
        ENGINE_REPLY[this.mode],
        this.mode === "engine-random" ? this.seed : undefined,
      );
      const detail = await this.client.getSession(this.sessionId);
      this.positions = [
        detail.initial_position.rows,
        ...detail.history.map((entry: HistoryEntry) => entry.position.rows),
      ];
      this.moves = [null, ...detail.history.map((entry) => entry.move)];
      this.feasible = result.feasible_moves;
      this.gameOver = result.game_over;
      this.cursor = this.positions.length - 1;
      return true;
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        this.rejectedMoves += 1;
      }
      this.onError?.(err instanceof Error ? err.message : String(err));
      return false;
    } finally {
      this.busy = false;
      this.pendingMove = null;
      this.pendingTransition = [];
      this.emit();
    }
  }

  /** View-only time travel over the stored history. */
  seek(cursor: number): void {
    if (cursor < 0 || cursor >= this.positions.length) return;
    this.cursor = cursor;
    this.emit();
  }

  undo(): void {
    this.seek(this.cursor - 1);
  }

  redo(): void {
    this.seek(this.cursor + 1);
  }

  /** Play until the game ends, always choosing the first feasible column;
   * used by scripted sessions and the hot-seat "autoplay" helper. */
  async playOut(maxPlies = 64): Promise<number> {
    let plies = 0;
    while (!this.gameOver && plies < maxPlies) {
      const col = this.feasible[0];
      if (col === undefined) break;
      const moved = await this.clickColumn(col);
      if (!moved) break;
      plies += 1;
    }
    return plies;
  }
}
