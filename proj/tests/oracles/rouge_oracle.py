# Regenerates tests/data/rouge/pairs.jsonl with the rouge-score package.
# Tokens are space-separated; no stemming, no lowercasing.
import json
import random

from rouge_score import rouge_scorer


class SpaceTokenizer:
    def tokenize(self, text):
        return [t for t in text.split(" ") if t]


def main():
    rng = random.Random(2024)
    vocab = ["a", "b", "c", "d", "e", "f", "the", "of", "x", "y"]
    scorer = rouge_scorer.RougeScorer(["rouge1", "rouge2", "rougeL"],
                                      tokenizer=SpaceTokenizer())
    with open("tests/data/rouge/pairs.jsonl", "w") as out:
        for _ in range(200):
            cand = [rng.choice(vocab) for _ in range(rng.randint(1, 25))]
            ref = [rng.choice(vocab) for _ in range(rng.randint(1, 25))]
            s = scorer.score(" ".join(ref), " ".join(cand))
            rec = {"candidate": cand, "reference": ref}
            for k, v in s.items():
                rec[k] = [v.recall, v.precision, v.fmeasure]
            out.write(json.dumps(rec) + "\n")


if __name__ == "__main__":
    main()
