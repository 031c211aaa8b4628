/** Plot rendering as standalone SVG files: a confusion-matrix heatmap and
 * a ROC curve.  No drawing dependencies needed. */

export function confusionSvg(conf: number[][], classes: number[]): string {
  const k = conf.length;
  const cell = 90;
  const margin = 70;
  const size = margin + k * cell + 20;
  const maxV = Math.max(1, ...conf.flat());
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${size}" height="${size}" font-family="monospace" font-size="13">`,
    `<text x="${margin + (k * cell) / 2}" y="20" text-anchor="middle">confusion matrix (true row, predicted column)</text>`,
  ];
  for (let i = 0; i < k; i++) {
    for (let j = 0; j < k; j++) {
      const v = conf[i][j];
      const shade = Math.round(255 - 190 * (v / maxV));
      const x = margin + j * cell;
      const y = margin + i * cell - 40;
      parts.push(
        `<rect x="${x}" y="${y}" width="${cell}" height="${cell}" fill="rgb(${shade},${shade},255)" stroke="#333"/>`,
        `<text x="${x + cell / 2}" y="${y + cell / 2 + 5}" text-anchor="middle">${v}</text>`
      );
    }
    parts.push(
      `<text x="${margin - 12}" y="${margin + i * cell + cell / 2 - 35}" text-anchor="end">b1=${classes[i]}</text>`,
      `<text x="${margin + i * cell + cell / 2}" y="${margin + k * cell - 22}" text-anchor="middle">b1=${classes[i]}</text>`
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

export function rocSvg(points: { fpr: number; tpr: number }[], auc: number): string {
  const size = 420;
  const pad = 50;
  const plot = size - 2 * pad;
  const toX = (v: number) => pad + v * plot;
  const toY = (v: number) => size - pad - v * plot;
  const path = points.map((p, i) => `${i ? "L" : "M"}${toX(p.fpr).toFixed(1)},${toY(p.tpr).toFixed(1)}`).join(" ");
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${size}" height="${size}" font-family="monospace" font-size="13">`,
    `<rect x="${pad}" y="${pad}" width="${plot}" height="${plot}" fill="none" stroke="#333"/>`,
    `<line x1="${toX(0)}" y1="${toY(0)}" x2="${toX(1)}" y2="${toY(1)}" stroke="#bbb" stroke-dasharray="4"/>`,
    `<path d="${path}" fill="none" stroke="#1f4e9c" stroke-width="2"/>`,
    `<text x="${size / 2}" y="${size - 12}" text-anchor="middle">false positive rate</text>`,
    `<text x="16" y="${size / 2}" text-anchor="middle" transform="rotate(-90 16 ${size / 2})">true positive rate</text>`,
    `<text x="${size / 2}" y="24" text-anchor="middle">ROC curve (AUC = ${auc.toFixed(4)})</text>`,
    "</svg>",
  ].join("\n");
}
