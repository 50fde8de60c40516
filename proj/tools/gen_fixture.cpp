// Regenerates data/synthetic_100k.fasta. The output is committed; rerunning
// this tool must reproduce it byte for byte.
#include <cstdio>
#include <random>
#include <string>

int main(int argc, char** argv) {
    const unsigned long seed = 0x5eedUL;
    const std::size_t length = 100000;
    const char letters[] = {'A', 'C', 'G', 'T'};

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);

    std::string out;
    out += ">synthetic-100k uniform ACGT, mt19937 seed 0x5eed\n";
    std::string line;
    for (std::size_t i = 0; i < length; ++i) {
        line.push_back(letters[pick(rng)]);
        if (line.size() == 70) {
            out += line;
            out += '\n';
            line.clear();
        }
    }
    if (!line.empty()) {
        out += line;
        out += '\n';
    }

    if (argc > 1) {
        std::FILE* f = std::fopen(argv[1], "wb");
        if (!f) {
            std::perror("fopen");
            return 1;
        }
        std::fwrite(out.data(), 1, out.size(), f);
        std::fclose(f);
    } else {
        std::fwrite(out.data(), 1, out.size(), stdout);
    }
    return 0;
}
