import { defineConfig } from "vite";

// during development the engine runs separately; proxy API calls to it
export default defineConfig({
  server: {
    proxy: {
      "/sessions": "http://127.0.0.1:8000",
      "/solve": "http://127.0.0.1:8000",
      "/convert": "http://127.0.0.1:8000",
    },
  },
  build: {
    outDir: "dist",
  },
});
