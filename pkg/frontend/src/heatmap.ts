import type { BoundaryResponse, WmsdPointDto } from './api';
import { DecodedField, colorFor, isolineCells } from './field';

export interface OverlayData {
  boundary?: BoundaryResponse;
  points?: WmsdPointDto[];
  highlighted?: Set<string>;
  isolineLevels?: number[];
}

// Paint a decoded field onto the canvas, window-aligned, then draw the
// region boundary and the alternatives on top. The canvas pixel size is
// taken as-is; callers size it to taste.
export function paintHeatmap(canvas: HTMLCanvasElement, field: DecodedField | null, overlay: OverlayData) {
  const ctx = canvas.getContext('2d');
  if (!ctx) return;
  const W = canvas.width;
  const H = canvas.height;
  ctx.clearRect(0, 0, W, H);
  ctx.fillStyle = '#ffffff';
  ctx.fillRect(0, 0, W, H);

  let window: [number, number, number, number] | null = null;
  if (field) {
    window = field.window;
  } else if (overlay.boundary) {
    const m = overlay.boundary.mean_weight;
    let top = 0;
    for (const [, wsd] of overlay.boundary.polyline) top = Math.max(top, wsd);
    window = [0, m, 0, Math.max(top, 1e-6) * 1.05];
  }
  if (!window) return;
  const [x0, x1, y0, y1] = window;
  const px = (wm: number) => ((wm - x0) / (x1 - x0)) * W;
  const py = (wsd: number) => H - ((wsd - y0) / (y1 - y0)) * H;

  if (field) {
    const cw = W / field.nx;
    const ch = H / field.ny;
    const iso = overlay.isolineLevels && overlay.isolineLevels.length
      ? isolineCells(field, overlay.isolineLevels)
      : null;
    for (let r = 0; r < field.ny; r++) {
      for (let c = 0; c < field.nx; c++) {
        const i = r * field.nx + c;
        const v = field.values[i];
        if (Number.isNaN(v)) continue;
        ctx.fillStyle = iso && iso[i] ? '#333333' : colorFor(v);
        // row 0 is the bottom of the window, canvas y grows downward
        ctx.fillRect(c * cw, H - (r + 1) * ch, cw + 0.5, ch + 0.5);
      }
    }
  }

  if (overlay.boundary) {
    ctx.strokeStyle = '#222222';
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    overlay.boundary.polyline.forEach(([wm, wsd], i) => {
      if (i === 0) ctx.moveTo(px(wm), py(wsd));
      else ctx.lineTo(px(wm), py(wsd));
    });
    ctx.stroke();
    ctx.fillStyle = '#222222';
    for (const [wm, wsd] of overlay.boundary.vertices) {
      ctx.beginPath();
      ctx.arc(px(wm), py(wsd), 2.5, 0, 2 * Math.PI);
      ctx.fill();
    }
  }

  if (overlay.points) {
    ctx.font = '11px sans-serif';
    for (const p of overlay.points) {
      const hot = overlay.highlighted?.has(p.id) ?? false;
      ctx.fillStyle = hot ? '#e6a817' : '#111111';
      ctx.beginPath();
      ctx.arc(px(p.wm), py(p.wsd), hot ? 5 : 3.5, 0, 2 * Math.PI);
      ctx.fill();
      ctx.fillText(p.id, px(p.wm) + 6, py(p.wsd) - 4);
    }
  }
}
