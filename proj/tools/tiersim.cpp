// Placeholder main; subcommands land together with the config module.
int main() { return 0; }
