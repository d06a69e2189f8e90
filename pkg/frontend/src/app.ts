import { AnalysisOverlay, renderBadges } from "./analysis";
import { ServiceClient } from "./api";
import { renderBoard } from "./board";
import { GameController } from "./controller";
import { MAX_SIDE, PositionEditor } from "./editor";
import type { OpponentMode } from "./types";

const SAMPLE_START = "PGGG/GPPG/GPGG/GPPP/PPGP";

export function mountApp(root: HTMLElement, baseUrl = ""): GameController {
  root.innerHTML = `
    <header>
      <h1>Transverse Wave</h1>
      <p class="tagline">pick a column with a green cell; it floods purple and
      drags every row already purpled there down with it — run out of moves
      and you lose</p>
    </header>
    <section class="toolbar">
      <label>opponent
        <select id="mode">
          <option value="hotseat">hot-seat</option>
          <option value="engine-optimal" selected>engine (optimal)</option>
          <option value="engine-random">engine (random, seeded)</option>
        </select>
      </label>
      <label>seed <input id="seed" type="number" value="0" size="4"></label>
      <button id="new-game">new game</button>
      <label class="toggle">
        <input id="analysis-toggle" type="checkbox"> analysis
      </label>
      <button id="undo">&#8592; undo</button>
      <button id="redo">redo &#8594;</button>
    </section>
    <div id="banner" class="banner hidden"></div>
    <div id="board"></div>
    <section class="editor">
      <h2>position editor</h2>
      <div class="toolbar">
        <label>rows <input id="ed-rows" type="number" min="1" max="${MAX_SIDE}" value="5" size="3"></label>
        <label>cols <input id="ed-cols" type="number" min="1" max="${MAX_SIDE}" value="4" size="3"></label>
        <button id="ed-resize">resize</button>
        <button id="ed-play">new game from here</button>
      </div>
      <div id="ed-board"></div>
      <div class="toolbar">
        <input id="ed-literal" size="40">
        <button id="ed-import">import</button>
        <button id="ed-export">export</button>
      </div>
      <div id="ed-error" class="error hidden"></div>
    </section>
    <section class="converter">
      <h2>converter</h2>
      <div class="toolbar">
        <label>view the current position as
          <select id="cv-target">
            <option value="crosswise_and">crosswise_and</option>
            <option value="crosswise_or">crosswise_or</option>
            <option value="demi_quantum_nim">demi_quantum_nim</option>
            <option value="avoid_true">avoid_true</option>
            <option value="friend_circle">friend_circle</option>
            <option value="demographic_influence">demographic_influence</option>
            <option value="hypergraph_nim">hypergraph_nim</option>
          </select>
        </label>
        <button id="cv-run">convert</button>
      </div>
      <pre id="cv-output" class="hidden"></pre>
    </section>
  `;

  const boardEl = root.querySelector<HTMLElement>("#board")!;
  const bannerEl = root.querySelector<HTMLElement>("#banner")!;
  const modeEl = root.querySelector<HTMLSelectElement>("#mode")!;
  const seedEl = root.querySelector<HTMLInputElement>("#seed")!;
  const edError = root.querySelector<HTMLElement>("#ed-error")!;
  const edLiteral = root.querySelector<HTMLInputElement>("#ed-literal")!;
  const edBoard = root.querySelector<HTMLElement>("#ed-board")!;

  const client = new ServiceClient(baseUrl);
  const editor = new PositionEditor();

  const overlay = new AnalysisOverlay(client, (analysis) => {
    renderBadges(boardEl, analysis);
  });

  const controller = new GameController(client, {
    onChange: (view, game) => {
      renderBoard(boardEl, view, {
        feasible: game.atTip && !game.busy ? game.feasible : [],
        onColumnClick: (col) => {
          void game.clickColumn(col).then((moved) => {
            if (moved) void overlay.refresh(game.sessionId);
          });
        },
      });
      if (game.gameOver && game.atTip) {
        const mover = game.cursor % 2 === 0 ? "first player" : "second player";
        bannerEl.textContent = `game over: ${mover} is to move and loses`;
        bannerEl.classList.remove("hidden");
      } else {
        bannerEl.classList.add("hidden");
      }
      if (!game.busy && game.atTip) {
        void overlay.refresh(game.sessionId);
      }
    },
    onError: (message) => {
      bannerEl.textContent = message;
      bannerEl.classList.remove("hidden");
    },
  });

  function startGame(position: unknown): void {
    overlay.cancel();
    void controller
      .start(
        position,
        modeEl.value as OpponentMode,
        Number(seedEl.value) || 0,
      )
      .catch((err) => {
        edError.textContent = String(err.message ?? err);
        edError.classList.remove("hidden");
      });
  }

  root.querySelector("#new-game")!.addEventListener("click", () => startGame(SAMPLE_START));
  root.querySelector("#undo")!.addEventListener("click", () => controller.undo());
  root.querySelector("#redo")!.addEventListener("click", () => controller.redo());
  root
    .querySelector<HTMLInputElement>("#analysis-toggle")!
    .addEventListener("change", (event) => {
      overlay.toggle((event.target as HTMLInputElement).checked);
      if (overlay.enabled) void overlay.refresh(controller.sessionId);
    });

  function renderEditor(): void {
    renderBoard(
      edBoard,
      { grid: editor.rows, pendingMove: null, transitionCells: [], historyCursor: 0 },
      { feasible: [] },
    );
    edBoard.querySelectorAll<HTMLElement>(".cell").forEach((cell) => {
      cell.addEventListener("click", () => {
        editor.toggle(Number(cell.dataset.row), Number(cell.dataset.col));
        renderEditor();
      });
    });
    edError.classList.add("hidden");
  }

  root.querySelector("#ed-resize")!.addEventListener("click", () => {
    try {
      editor.resize(
        Number(root.querySelector<HTMLInputElement>("#ed-rows")!.value),
        Number(root.querySelector<HTMLInputElement>("#ed-cols")!.value),
      );
      renderEditor();
    } catch (err) {
      edError.textContent = String((err as Error).message);
      edError.classList.remove("hidden");
    }
  });
  root.querySelector("#ed-export")!.addEventListener("click", () => {
    edLiteral.value = editor.literal();
  });
  root.querySelector("#ed-import")!.addEventListener("click", () => {
    try {
      editor.load(edLiteral.value);
      renderEditor();
    } catch (err) {
      edError.textContent = String((err as Error).message);
      edError.classList.remove("hidden");
    }
  });
  root.querySelector("#ed-play")!.addEventListener("click", () => {
    // the service owns cell-level validation; its 400 surfaces inline
    startGame(edLiteral.value.trim() || editor.literal());
  });

  // other rulesets are view-only: the current board shown through the
  // registered reductions, as a JSON document
  const cvOutput = root.querySelector<HTMLElement>("#cv-output")!;
  root.querySelector("#cv-run")!.addEventListener("click", () => {
    const target = root.querySelector<HTMLSelectElement>("#cv-target")!.value;
    const rows = controller.view.grid;
    client
      .convert("transverse_wave", target, { rows })
      .then((result) => {
        cvOutput.textContent = JSON.stringify(result.document, null, 2);
        cvOutput.classList.remove("hidden");
      })
      .catch((err) => {
        cvOutput.textContent = String((err as Error).message);
        cvOutput.classList.remove("hidden");
      });
  });

  renderEditor();
  startGame(SAMPLE_START);
  return controller;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mountApp(document.getElementById("app")!);
}
