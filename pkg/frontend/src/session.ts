import { ApiClient } from "./api.js";
import { CandidateRow, offeredTexts, renderCandidates } from "./candidates.js";
import { splitSentences } from "./segmentation.js";

/**
 * One sentence card. Lifecycle: new -> translating -> ready ->
 * accepted. A failed accept or translate leaves the card where it was,
 * with `error` set, so the UI can offer a retry. Accepted cards are
 * immutable.
 */
export type CardStatus = "new" | "translating" | "ready" | "accepted";

export interface Card {
  id: number;
  source: string;
  status: CardStatus;
  candidates: CandidateRow[];
  offered: string[];
  selected: number | null;
  editedText: string | null;
  error: string | null;
  acceptedId: number | null;
}

/** Session state: ordered cards plus the accept/translate workflows. */
export class Session {
  cards: Card[] = [];
  onChange: (() => void) | null = null;
  private nextId = 1;

  constructor(
    private readonly api: ApiClient,
    readonly sessionId: string = `cat-${Date.now().toString(36)}`,
  ) {}

  private notify(): void {
    if (this.onChange) this.onChange();
  }

  /** Segment pasted text into sentences, one new card each. */
  addText(text: string): Card[] {
    const added = splitSentences(text).map((source) => {
      const card: Card = {
        id: this.nextId++,
        source,
        status: "new",
        candidates: [],
        offered: [],
        selected: null,
        editedText: null,
        error: null,
        acceptedId: null,
      };
      this.cards.push(card);
      return card;
    });
    this.notify();
    return added;
  }

  async translateCard(card: Card): Promise<void> {
    if (card.status === "accepted" || card.status === "translating") return;
    card.status = "translating";
    card.error = null;
    this.notify();
    try {
      const doc = await this.api.translate(card.source);
      card.candidates = renderCandidates(doc);
      card.offered = offeredTexts(card.candidates);
      card.selected = null;
      card.status = "ready";
    } catch (error) {
      card.status = "new";
      card.error = error instanceof Error ? error.message : String(error);
    }
    this.notify();
  }

  async translateAll(): Promise<void> {
    for (const card of this.cards) {
      if (card.status === "new") await this.translateCard(card);
    }
  }

  /** Select one candidate row; clears any hand edit. No-op once accepted. */
  select(card: Card, index: number): void {
    if (card.status === "accepted") return;
    card.selected = index;
    card.editedText = null;
    this.notify();
  }

  /** Hand-edit the translation; clears the row selection. */
  edit(card: Card, text: string): void {
    if (card.status === "accepted") return;
    card.editedText = text;
    card.selected = null;
    this.notify();
  }

  /** The text an accept would submit, or null if nothing is chosen yet. */
  chosenText(card: Card): string | null {
    if (card.editedText !== null && card.editedText.trim() !== "") {
      return card.editedText.trim();
    }
    if (card.selected !== null) {
      const row = card.candidates.find((r) => r.index === card.selected && !r.manual);
      if (row) return row.text;
    }
    return null;
  }

  /**
   * Record the choice through /api/accept. On success the card becomes
   * accepted (immutable); on any failure it stays as it was, with the
   * error kept for a retry affordance. Never touches engine state
   * otherwise.
   */
  async accept(card: Card): Promise<boolean> {
    const chosen = this.chosenText(card);
    if (card.status !== "ready" || chosen === null) return false;
    card.error = null;
    try {
      const reply = await this.api.accept({
        source: card.source,
        chosen,
        offered: card.offered,
        session: this.sessionId,
      });
      card.status = "accepted";
      card.acceptedId = reply.id;
      this.notify();
      return true;
    } catch (error) {
      card.error = error instanceof Error ? error.message : String(error);
      this.notify();
      return false;
    }
  }
}
