export const MAX_SIDE = 16;

/** Paintable grid for setting up positions; import/export the compact
 * literal and the JSON document.  Structural limits are enforced here, the
 * service stays the authority on full validation. */
export class PositionEditor {
  rows: string[];

  constructor(rows = 5, cols = 4) {
    checkDimensions(rows, cols);
    this.rows = Array.from({ length: rows }, () => "G".repeat(cols));
  }

  resize(rows: number, cols: number): void {
    checkDimensions(rows, cols);
    this.rows = Array.from({ length: rows }, (_, i) => {
      const old = this.rows[i] ?? "";
      return (old + "G".repeat(cols)).slice(0, cols);
    });
  }

  toggle(row: number, col: number): void {
    const line = this.rows[row];
    if (line === undefined || col < 0 || col >= line.length) {
      throw new Error(`no cell at row ${row}, column ${col}`);
    }
    const flipped = line[col] === "G" ? "P" : "G";
    this.rows[row] = line.slice(0, col) + flipped + line.slice(col + 1);
  }

  literal(): string {
    return this.rows.join("/");
  }

  document(): { ruleset: string; rows: string[]; version: number } {
    return { ruleset: "transverse_wave", rows: [...this.rows], version: 1 };
  }

  /** Accepts a literal or a JSON document.  Only shape is checked locally;
   * cell-level validation errors surface from the service on import. */
  load(text: string): void {
    const trimmed = text.trim();
    let rows: string[];
    if (trimmed.startsWith("{")) {
      const doc = JSON.parse(trimmed);
      if (!Array.isArray(doc.rows) || !doc.rows.every((r: unknown) => typeof r === "string")) {
        throw new Error("document must carry a rows array of strings");
      }
      rows = doc.rows;
    } else {
      rows = trimmed.split("/");
    }
    checkDimensions(rows.length, rows[0]?.length ?? 0);
    if (rows.some((r) => r.length !== rows[0].length)) {
      throw new Error("rows must all have the same width");
    }
    this.rows = rows;
  }
}

function checkDimensions(rows: number, cols: number): void {
  if (rows < 1 || cols < 1 || rows > MAX_SIDE || cols > MAX_SIDE) {
    throw new Error(`grid must be between 1x1 and ${MAX_SIDE}x${MAX_SIDE}`);
  }
}
