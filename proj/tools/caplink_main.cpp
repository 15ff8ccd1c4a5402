#include "caplink/jobs.hpp"

int main(int argc, char** argv) { return caplink::run_cli(argc, argv); }
