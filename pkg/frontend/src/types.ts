// Wire types for the translation service API.

export interface Segment {
  text: string;
  untranslated: boolean;
}

export interface TokenAnalysis {
  lexeme: string;
  pos: string;
  features: Record<string, string | boolean>;
}

export interface TokenDump {
  surface: string;
  deleted: boolean;
  analyses: TokenAnalysis[];
}

export interface AssignmentDump {
  score: number[];
  instances: string[];
}

export interface ResultDoc {
  source: string;
  analyses: TokenDump[];
  assignments: AssignmentDump[];
  outputs: Segment[][];
}

export interface AcceptRequest {
  source: string;
  chosen: string;
  offered: string[];
  session?: string;
}

export interface AcceptReply {
  id: number;
  edited: boolean;
}

export interface Health {
  status: string;
  groups: number;
  rules: number;
}
