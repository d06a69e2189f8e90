import type { Cell } from "./types";

/** View model for the grid: the board shown is always the session position
 * at historyCursor, with transition cells set only mid-animation. */
export interface BoardView {
  grid: string[];
  pendingMove: number | null;
  transitionCells: Cell[];
  historyCursor: number;
}

/** Cells that flip when a column is selected: the green cells of the column
 * itself plus every green cell of a row holding a purple cell there. */
export function transitionCells(rows: string[], col: number): Cell[] {
  const flips: Cell[] = [];
  for (let i = 0; i < rows.length; i++) {
    const marked = rows[i][col] === "P";
    for (let j = 0; j < rows[i].length; j++) {
      if (rows[i][j] === "G" && (j === col || marked)) {
        flips.push([i, j]);
      }
    }
  }
  return flips;
}

export function cellKey(cell: Cell): string {
  return `${cell[0]},${cell[1]}`;
}

export interface BoardCallbacks {
  feasible: number[];
  onColumnClick?: (col: number) => void;
}

/** Render the m-by-n board with clickable column headers.  Headers outside
 * the feasible list are inert and never reach the click handler. */
export function renderBoard(
  container: HTMLElement,
  view: BoardView,
  callbacks: BoardCallbacks,
): void {
  const cols = view.grid.length ? view.grid[0].length : 0;
  const flips = new Set(view.transitionCells.map(cellKey));
  const feasible = new Set(callbacks.feasible);

  container.textContent = "";
  const table = document.createElement("div");
  table.className = "board";
  table.style.setProperty("--cols", String(cols));

  const header = document.createElement("div");
  header.className = "board-header";
  for (let j = 0; j < cols; j++) {
    const cell = document.createElement("button");
    cell.className = "col-header";
    cell.dataset.col = String(j);
    cell.textContent = String(j);
    if (feasible.has(j)) {
      cell.classList.add("feasible");
      cell.addEventListener("click", () => callbacks.onColumnClick?.(j));
    } else {
      cell.disabled = true;
    }
    if (view.pendingMove === j) {
      cell.classList.add("pending");
    }
    header.appendChild(cell);
  }
  table.appendChild(header);

  view.grid.forEach((row, i) => {
    const rowEl = document.createElement("div");
    rowEl.className = "board-row";
    for (let j = 0; j < row.length; j++) {
      const cell = document.createElement("div");
      cell.dataset.row = String(i);
      cell.dataset.col = String(j);
      const color = row[j] === "G" ? "green" : "purple";
      cell.className = `cell cell-${color}`;
      if (flips.has(`${i},${j}`)) {
        cell.classList.add("cell-transition");
      }
      rowEl.appendChild(cell);
    }
    table.appendChild(rowEl);
  });

  container.appendChild(table);
}
