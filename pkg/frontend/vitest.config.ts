import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    globals: true,
    environment: "happy-dom",
    environmentOptions: {
      // the scripted session talks to the engine as if served by it,
      // matching deployment (the service hosts the built UI at /ui)
      happyDOM: { url: "http://127.0.0.1:8931" },
    },
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
