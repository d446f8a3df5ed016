// Bundled default word lists: stopwords for the language filter, closed-class
// pronoun/verb lists, the familiar-word list for Dale-Chall, the hand-picked
// risk phrases, and the ten default category sets. All of them can be
// replaced at runtime via plain-text/JSON lexicon files.

#include <initializer_list>

#include "earlyrisk/metadata.hpp"
#include "earlyrisk/textproc.hpp"

namespace earlyrisk {

namespace {

std::unordered_set<std::string> make_set(std::initializer_list<const char*> words) {
  std::unordered_set<std::string> s;
  for (const char* w : words) s.insert(w);
  return s;
}

}  // namespace

const StopwordTable& StopwordTable::bundled() {
  static const StopwordTable table(StopwordTable::LangMap{
      {"english",
       make_set({"i",      "me",    "my",    "myself", "we",    "our",   "ours",  "you",
                 "your",   "he",    "him",   "his",    "she",   "her",   "it",    "its",
                 "they",   "them",  "their", "what",   "which", "who",   "this",  "that",
                 "these",  "those", "am",    "is",     "are",   "was",   "were",  "be",
                 "been",   "have",  "has",   "had",    "do",    "does",  "did",   "a",
                 "an",     "the",   "and",   "but",    "if",    "or",    "because", "as",
                 "until",  "while", "of",    "at",     "by",    "for",   "with",  "about",
                 "into",   "through", "to",  "from",   "in",    "out",   "on",    "off",
                 "over",   "under", "again", "then",   "once",  "here",  "there", "all",
                 "any",    "both",  "each",  "few",    "more",  "most",  "other", "some",
                 "such",   "no",    "nor",   "not",    "only",  "same",  "so",    "than",
                 "too",    "very",  "can",   "will",   "just",  "should", "now"})},
      {"german",
       make_set({"aber", "alle", "als",  "also", "am",   "an",    "auch", "auf",  "aus",
                 "bei",  "bin",  "bis",  "bist", "da",   "damit", "dann", "das",  "dass",
                 "dein", "dem",  "den",  "der",  "des",  "die",   "doch", "du",   "durch",
                 "ein",  "eine", "einem", "einen", "einer", "er",  "es",   "für",  "habe",
                 "haben", "hat", "hatte", "ich",  "ihr",  "im",    "ist",  "ja",   "kann",
                 "mein", "mich", "mir",  "mit",  "nach", "nicht", "noch", "nur",  "oder",
                 "sein", "sich", "sie",  "sind", "über", "um",    "und",  "uns",  "von",
                 "war",  "wenn", "wie",  "wir",  "zu",   "zum",   "zur"})},
      {"spanish",
       make_set({"el",    "la",    "los",  "las",  "un",   "una",  "unos", "unas", "y",
                 "o",     "pero",  "de",   "del",  "al",   "en",   "con",  "por",  "para",
                 "que",   "no",    "su",   "sus",  "se",   "lo",   "le",   "les",  "mi",
                 "mis",   "tu",    "tus",  "te",   "nos",  "es",   "son",  "era",  "eran",
                 "fue",   "ser",   "estar", "está", "están", "como", "más", "muy",  "ya",
                 "hay",   "este",  "esta", "estos", "estas", "yo",  "él",   "ella", "ellos",
                 "ellas", "nosotros", "usted"})},
      {"french",
       make_set({"le",   "les",   "des",  "du",   "de",   "et",   "ou",   "mais", "dans",
                 "en",   "au",    "aux",  "ce",   "cette", "ces",  "que",  "qui",  "quoi",
                 "ne",   "pas",   "plus", "pour", "par",  "sur",  "avec", "sans", "sous",
                 "je",   "tu",    "il",   "elle", "nous", "vous", "ils",  "elles", "se",
                 "mon",  "ma",    "mes",  "ton",  "ta",   "tes",  "son",  "sa",   "ses",
                 "notre", "votre", "leur", "est",  "sont", "était", "être", "avoir", "ai",
                 "avons", "avez", "ont",  "y"})},
      {"italian",
       make_set({"il",   "lo",   "la",    "i",     "gli",  "le",    "uno",  "una",  "e",
                 "ma",   "di",   "da",    "in",    "con",  "su",    "per",  "tra",  "fra",
                 "che",  "chi",  "non",   "più",   "io",   "tu",    "lui",  "lei",  "noi",
                 "voi",  "loro", "mi",    "ti",    "si",   "ci",    "vi",   "mio",  "mia",
                 "tuo",  "tua",  "suo",   "sua",   "nostro", "vostro", "è",  "sono", "erano",
                 "essere", "avere", "ha", "ho",    "hai",  "hanno", "questo", "questa",
                 "quello", "quella"})},
      {"portuguese",
       make_set({"o",    "os",    "as",   "um",   "uma",  "uns",  "umas", "e",    "ou",
                 "mas",  "de",    "do",   "da",   "dos",  "das",  "em",   "no",   "na",
                 "nos",  "nas",   "com",  "por",  "para", "que",  "não",  "se",   "seu",
                 "sua",  "seus",  "suas", "mim",  "meu",  "minha", "ele", "ela",  "eles",
                 "elas", "nós",   "você", "vocês", "é",   "são",  "foi",  "ser",  "estar",
                 "está", "estão", "como", "mais", "muito", "já",  "há",   "este", "esta",
                 "isso", "isto",  "eu"})},
      {"dutch",
       make_set({"de",    "het",  "een",  "van",  "op",   "aan",   "met",  "voor", "door",
                 "naar",  "uit",  "bij",  "ik",   "jij",  "je",    "hij",  "zij",  "ze",
                 "wij",   "we",   "jullie", "u",  "mij",  "mijn",  "jouw", "zijn", "haar",
                 "ons",   "onze", "hun",  "dat",  "dit",  "die",   "deze", "wat",  "wie",
                 "niet",  "geen", "wel",  "was",  "waren", "ben",  "bent", "heb",  "hebt",
                 "heeft", "hebben", "er", "ook",  "al",   "als",   "dan",  "toen", "nu",
                 "hier",  "daar"})},
      {"danish",
       make_set({"og",   "jeg",  "det",  "at",   "en",   "den",  "til",  "er",   "som",
                 "på",   "de",   "med",  "han",  "af",   "ikke", "der",  "var",  "mig",
                 "sig",  "men",  "et",   "har",  "om",   "vi",   "min",  "havde", "ham",
                 "hun",  "nu",   "da",   "fra",  "du",   "ud",   "sin",  "dem",  "os",
                 "op",   "man",  "hans", "hvor", "eller", "hvad", "skal", "selv", "her",
                 "alle", "vil",  "blev", "kunne", "ind",  "når",  "være", "dog",  "noget",
                 "ville", "jo",  "deres", "efter", "ned", "skulle", "denne"})},
      {"finnish",
       make_set({"ja",    "on",    "ei",    "se",     "että",  "en",     "ole",   "oli",
                 "mutta", "niin",  "kun",   "hän",    "minä",  "sinä",   "me",    "te",
                 "he",    "tämä",  "tuo",   "joka",   "mikä",  "missä",  "mitä",  "kuin",
                 "myös",  "vain",  "jos",   "nyt",    "sitten", "siis",  "olen",  "olet",
                 "olemme", "ovat", "olla",  "hänen",  "minun", "sinun",  "meidän", "heidän",
                 "sen",   "sitä",  "siinä", "tässä"})},
      {"hungarian",
       make_set({"az",    "és",   "egy",  "hogy", "nem",  "is",   "van",  "volt", "ez",
                 "azt",   "el",   "meg",  "én",   "ő",    "mi",   "ti",   "ők",   "engem",
                 "neki",  "vele", "ha",   "mint", "csak", "már",  "még",  "mert", "vagy",
                 "aki",   "ami",  "amely", "minden", "nagyon", "lesz", "lehet", "kell",
                 "itt",   "ott",  "most", "úgy",  "így",  "majd", "tehát"})},
      {"russian",
       make_set({"и",    "в",     "во",    "не",   "что",  "он",    "на",   "я",    "с",
                 "со",   "как",   "а",     "то",   "все",  "она",   "так",  "его",  "но",
                 "да",   "ты",    "к",     "у",    "же",   "вы",    "за",   "бы",   "по",
                 "только", "ее",  "мне",   "было", "вот",  "от",    "меня", "еще",  "нет",
                 "о",    "из",    "ему",   "теперь", "когда", "даже", "ну",  "ли",   "если",
                 "уже",  "или",   "ни",    "быть", "был",  "него",  "до",   "вас",  "ведь",
                 "там",  "потом", "себя",  "ничего", "ей",  "может", "они",  "тут",  "где",
                 "есть", "надо",  "ней",   "для",  "мы",   "тебя",  "их",   "чем",  "была",
                 "сам",  "без",   "чтобы", "раз",  "тоже", "себе",  "под",  "будет"})},
  });
  return table;
}

const std::unordered_set<std::string>& possessive_pronoun_set() {
  static const auto s = make_set({"my", "your", "his", "her", "its", "our", "their", "mine",
                                  "yours", "hers", "ours", "theirs"});
  return s;
}

const std::unordered_set<std::string>& personal_pronoun_set() {
  static const auto s =
      make_set({"i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them"});
  return s;
}

const std::unordered_set<std::string>& irregular_past_set() {
  static const auto s = make_set(
      {"was",   "were",  "had",    "did",    "went",   "said",   "made",   "got",
       "took",  "came",  "saw",    "knew",   "thought", "felt",  "found",  "gave",
       "told",  "became", "left",  "meant",  "kept",   "began",  "brought", "bought",
       "sat",   "stood", "lost",   "paid",   "met",    "ran",    "held",   "wrote",
       "spoke", "slept", "won",    "broke",  "spent",  "fell",   "drove",  "ate",
       "drank", "woke",  "chose",  "sent",   "built",  "heard",  "put",    "read",
       "let",   "cut",   "hurt",   "led",    "fed",    "sang",   "swam",   "threw",
       "grew",  "flew",  "drew",   "wore",   "rode",   "rose",   "forgot", "hung",
       "cried", "tried", "lied"});
  return s;
}

const PhraseLexicon& default_phrase_lexicon() {
  static const PhraseLexicon lex = [] {
    PhraseLexicon p;
    p.diagnosis_patterns = {
        "i was diagnosed with depression",
        "i am diagnosed with depression",
        "i have been diagnosed with depression",
        "i've been diagnosed with depression",
        "i was diagnosed with major depressive disorder",
        "i've been diagnosed with anxiety and depression",
        "i was recently diagnosed with depression",
        "i got diagnosed with depression",
    };
    p.antidepressants = {"zoloft",      "paxil",      "prozac",      "lexapro",
                         "celexa",      "effexor",    "cymbalta",    "wellbutrin",
                         "remeron",     "trazodone",  "elavil",      "sertraline",
                         "fluoxetine",  "citalopram", "escitalopram", "venlafaxine",
                         "duloxetine",  "bupropion",  "mirtazapine", "amitriptyline",
                         "paroxetine"};
    p.validate();
    return p;
  }();
  return lex;
}

const EasyWordSet& default_easy_words() {
  static const EasyWordSet words = make_set(
      {"a",        "about",   "after",   "again",  "all",    "always", "am",     "an",
       "and",      "any",     "are",     "as",     "at",     "ask",    "away",   "back",
       "bad",      "ball",    "be",      "because", "bed",   "been",   "before", "best",
       "better",   "big",     "black",   "blue",   "book",   "both",   "box",    "boy",
       "bring",    "but",     "buy",     "by",     "call",   "came",   "can",    "car",
       "cat",      "chair",   "children", "city",  "clean",  "close",  "cold",   "come",
       "could",    "cut",     "day",     "did",    "do",     "does",   "dog",    "done",
       "door",     "down",    "draw",    "drink",  "eat",    "eight",  "end",    "even",
       "every",    "eye",     "face",    "fall",   "far",    "fast",   "father", "feel",
       "feet",     "find",    "fire",    "first",  "five",   "fly",    "food",   "for",
       "four",     "friend",  "from",    "full",   "fun",    "funny",  "game",   "gave",
       "get",      "girl",    "give",    "go",     "goes",   "going",  "good",   "got",
       "grass",    "green",   "grow",    "had",    "hand",   "happy",  "hard",   "has",
       "have",     "he",      "head",    "hear",   "help",   "her",    "here",   "him",
       "his",      "hold",    "home",    "hot",    "house",  "how",    "i",      "if",
       "in",       "into",    "is",      "it",     "its",    "jump",   "just",   "keep",
       "kind",     "know",    "last",    "late",   "laugh",  "left",   "let",    "light",
       "like",     "little",  "live",    "long",   "look",   "made",   "make",   "man",
       "many",     "may",     "me",      "men",    "milk",   "more",   "morning", "most",
       "mother",   "much",    "must",    "my",     "name",   "near",   "never",  "new",
       "next",     "nice",    "night",   "nine",   "no",     "not",    "now",    "of",
       "off",      "old",     "on",      "once",   "one",    "only",   "open",   "or",
       "other",    "our",     "out",     "over",   "own",    "paper",  "part",   "people",
       "pick",     "place",   "play",    "please", "pretty", "pull",   "put",    "ran",
       "read",     "red",     "ride",    "right",  "room",   "round",  "run",    "said",
       "same",     "sat",     "saw",     "say",    "school", "sea",    "see",    "seven",
       "shall",    "she",     "show",    "sing",   "sit",    "six",    "sleep",  "small",
       "so",       "some",    "soon",    "start",  "stop",   "story",  "sun",    "table",
       "take",     "talk",    "tell",    "ten",    "than",   "thank",  "that",   "the",
       "their",    "them",    "then",    "there",  "these",  "they",   "thing",  "think",
       "this",     "those",   "three",   "time",   "to",     "today",  "together", "too",
       "tree",     "two",     "under",   "up",     "upon",   "us",     "use",    "very",
       "walk",     "want",    "warm",    "was",    "wash",   "water",  "way",    "we",
       "well",     "went",    "were",    "what",   "when",   "where",  "which",  "white",
       "who",      "why",     "will",    "wind",   "with",   "word",   "work",   "world",
       "would",    "write",   "year",    "yellow", "yes",    "you",    "your"});
  return words;
}

const CategoryLexicon& default_category_lexicon() {
  static const CategoryLexicon lex = [] {
    CategoryLexicon c;
    c.selected = {"function_words",   "i_variants",    "pronouns",
                  "personal_pronouns", "verbs",        "cognitive_process",
                  "present_focus",    "dictionary_words", "analytical_thinking",
                  "authenticity"};
    c.categories.resize(10);

    c.categories[0].words =
        make_set({"the", "a",   "an",  "and", "or",   "but",  "if",   "of",   "to",  "in",
                  "on",  "at",  "by",  "for", "with", "from", "as",   "is",   "are", "was",
                  "were", "be", "been", "am", "i",    "you",  "it",   "that", "this", "not",
                  "no",  "so",  "than", "then", "there", "do", "does", "did",  "have", "has"});

    c.categories[1].words = make_set({"i", "me", "my", "myself", "mine", "i'm", "i've",
                                      "i'll", "i'd", "im"});

    c.categories[2].words = make_set(
        {"i",      "you",   "he",     "she",      "it",       "we",       "they",   "me",
         "him",    "her",   "us",     "them",     "my",       "your",     "his",    "its",
         "our",    "their", "mine",   "yours",    "hers",     "ours",     "theirs", "this",
         "that",   "these", "those",  "who",      "whom",     "whose",    "which",  "what",
         "anybody", "anyone", "anything", "everybody", "everyone", "everything", "nobody",
         "nothing", "somebody", "someone", "something"});

    c.categories[3].words =
        make_set({"i", "you", "he", "she", "we", "they", "me", "him", "her", "us", "them"});

    c.categories[4].words = make_set(
        {"is",   "are",  "was",  "were", "be",   "been", "being", "am",   "have", "has",
         "had",  "do",   "does", "did",  "went", "got",  "made",  "said", "saw",  "took",
         "came", "felt", "knew", "thought"});
    c.categories[4].prefixes = {"go",    "get",  "make", "think", "know", "feel",
                                "want",  "say",  "see",  "take",  "come", "work",
                                "need",  "try",  "use"};

    c.categories[5].words = make_set({"because", "maybe", "perhaps", "should", "would",
                                      "could", "sense", "therefore", "why", "how"});
    c.categories[5].prefixes = {"think",  "know",   "reason",  "understand", "realiz",
                                "believ", "consider", "wonder", "figur",     "idea",
                                "question", "remember", "decid", "assum",    "guess",
                                "mean",   "logic",  "caus",    "effect"};

    c.categories[6].words = make_set({"is", "are", "am", "be", "being", "now", "today",
                                      "currently", "here", "this", "do", "does", "have",
                                      "has", "right"});
    c.categories[6].prefixes = {"want", "need", "feel", "think", "know"};

    c.categories[7].words = default_easy_words();

    c.categories[8].words = make_set({"therefore", "thus", "hence", "evidence", "data",
                                      "objective", "because"});
    c.categories[8].prefixes = {"analy",  "conclu",  "result", "method", "system",
                                "structur", "logic", "measur", "compar", "evaluat",
                                "determin", "process", "factor"};

    c.categories[9].words = make_set({"i", "me", "my", "myself", "really", "actually",
                                      "personally", "felt", "think", "believe"});
    c.categories[9].prefixes = {"honest", "truth", "feel", "admit", "confess"};

    c.validate();
    return c;
  }();
  return lex;
}

}  // namespace earlyrisk
